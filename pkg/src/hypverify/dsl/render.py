"""Canonical pretty-printer; ``parse(render(spec)) == spec``."""

from __future__ import annotations

from .ast import BinOp, Call, IdentitySpec, Int, Name, Neg, Sum, Var

# binding strength of each syntactic level
_ADD, _MUL, _UNARY, _POWER, _ATOM = 1, 2, 3, 4, 5


def _level(e) -> int:
    if isinstance(e, BinOp):
        return {"+": _ADD, "-": _ADD, "*": _MUL, "/": _MUL, "^": _POWER}[e.op]
    if isinstance(e, Neg):
        return _UNARY
    return _ATOM


def _wrap(e, minimum: int) -> str:
    text = render_expr(e)
    return f"({text})" if _level(e) < minimum else text


def render_expr(e) -> str:
    if isinstance(e, Int):
        return str(e.value)
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Name):
        return e.name
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, _UNARY)
    if isinstance(e, BinOp):
        if e.op == "^":
            return f"{_wrap(e.left, _ATOM)}^{_wrap(e.right, _UNARY)}"
        level = _level(e)
        # left-associative: an equal-level right operand needs parentheses
        return f"{_wrap(e.left, level)} {e.op} {_wrap(e.right, level + 1)}"
    if isinstance(e, Sum):
        parts = [e.index, render_expr(e.lo), render_expr(e.hi), render_expr(e.body)]
        return f"sum({', '.join(parts)})"
    if isinstance(e, Call):
        return f"{e.func}({', '.join(render_expr(a) for a in e.args)})"
    raise TypeError(f"not an expression node: {e!r}")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_spec(spec: IdentitySpec) -> str:
    params = ", ".join(
        f"{p.name} in {render_expr(p.lo)}..{render_expr(p.hi)}" for p in spec.params
    )
    return (
        f"identity {_quote(spec.name)} {{\n"
        f"  params {params};\n"
        f"  lhs = {render_expr(spec.lhs)};\n"
        f"  rhs = {render_expr(spec.rhs)};\n"
        "}\n"
    )
