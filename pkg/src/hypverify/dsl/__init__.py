"""A small language for stating sum-versus-closed-form identities.

An identity file declares integer parameters with (possibly dependent)
ranges and two expressions in the formal variable ``x``; running it
compares both sides as exact polynomials at every parameter binding.
"""

from .ast import IdentitySpec
from .errors import DslError, EvalError, LexError, ParseError
from .evaluator import enumerate_bindings, eval_expr, run_spec
from .lexer import Token, tokenize
from .parser import parse_expression, parse_identity_file
from .render import render_expr, render_spec

__all__ = [
    "DslError", "EvalError", "IdentitySpec", "LexError", "ParseError", "Token",
    "enumerate_bindings", "eval_expr", "parse_expression", "parse_identity_file",
    "render_expr", "render_spec", "run_spec", "tokenize",
]
