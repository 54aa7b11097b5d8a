"""A small dependent surface language evaluated into the kernel's semantics."""

from .ast import ParseError, Span, Term, TypeExpr
from .check import CheckedModule, TypeCheckError, check_module
from .parse import parse_module, parse_term_text
from .printer import print_term, print_type

__all__ = [
    "CheckedModule",
    "ParseError",
    "Span",
    "Term",
    "TypeCheckError",
    "TypeExpr",
    "check_module",
    "parse_module",
    "parse_term_text",
    "print_term",
    "print_type",
]
