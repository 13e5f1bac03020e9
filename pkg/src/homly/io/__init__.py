"""File formats, builtin catalog, reports and the command line."""
from .catalog import builtin, builtin_names, builtin_source, twist_base
from .dsl import (
    emit_algebra_file,
    emit_file,
    emit_hom_ly_file,
    parse_algebra_file,
    parse_assignment,
    parse_expression,
    parse_file,
    parse_hom_ly_file,
)
from .report import REPORT_SCHEMA, emit_report, load_report, report_document
