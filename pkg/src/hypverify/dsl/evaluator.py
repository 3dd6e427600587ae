"""Evaluate identity expressions to exact polynomials in x."""

from __future__ import annotations

from typing import Iterator, Mapping

from ..checker import CheckReport
from ..hyper import TerminatingF21Params, hyp2f1_terminating
from ..numeric import DomainError, binomial, factorial, pochhammer
from ..poly import Polynomial
from .ast import BinOp, Call, IdentitySpec, Int, Name, Neg, Sum, Var
from .errors import EvalError

_X = Polynomial([0, 1])


def _fail(node, message: str) -> EvalError:
    return EvalError(message, node.line, node.column)


def _int_arg(value: Polynomial, node, what: str) -> int:
    if not value.is_constant():
        raise _fail(node, f"{what} must be a constant, got {value}")
    q = value.constant_value()
    if q.denominator != 1:
        raise _fail(node, f"{what} must be an integer, got {q}")
    return q.numerator


def eval_expr(e, bindings: Mapping[str, int]) -> Polynomial:
    """Evaluate ``e`` with integer ``bindings`` for parameters and indices."""
    if isinstance(e, Int):
        return Polynomial([e.value])
    if isinstance(e, Var):
        return _X
    if isinstance(e, Name):
        if e.name not in bindings:
            raise _fail(e, f"unbound identifier {e.name!r}")
        return Polynomial([bindings[e.name]])
    if isinstance(e, Neg):
        return -eval_expr(e.operand, bindings)
    if isinstance(e, BinOp):
        return _eval_binop(e, bindings)
    if isinstance(e, Sum):
        return _eval_sum(e, bindings)
    if isinstance(e, Call):
        return _eval_call(e, bindings)
    raise TypeError(f"not an expression node: {e!r}")


def _eval_binop(e: BinOp, bindings) -> Polynomial:
    left = eval_expr(e.left, bindings)
    right = eval_expr(e.right, bindings)
    if e.op == "+":
        return left + right
    if e.op == "-":
        return left - right
    if e.op == "*":
        return left * right
    if e.op == "/":
        if not right.is_constant():
            raise _fail(e, f"division by non-constant {right}")
        if right.is_zero():
            raise _fail(e, "division by zero")
        return left / right.constant_value()
    if e.op == "^":
        k = _int_arg(right, e.right, "exponent")
        if left.is_constant():
            base = left.constant_value()
            if base == 0 and k < 0:
                raise _fail(e, "division by zero: 0 raised to a negative power")
            return Polynomial([base ** k])
        if k < 0:
            raise _fail(e, f"negative exponent {k} of non-constant base {left}")
        return left ** k
    raise _fail(e, f"unknown operator {e.op!r}")


def _eval_sum(e: Sum, bindings) -> Polynomial:
    if e.index in bindings:
        raise _fail(e, f"summation index {e.index!r} shadows an existing binding")
    lo = _int_arg(eval_expr(e.lo, bindings), e.lo, "lower summation bound")
    hi = _int_arg(eval_expr(e.hi, bindings), e.hi, "upper summation bound")
    total = Polynomial()
    scope = dict(bindings)
    for k in range(lo, hi + 1):
        scope[e.index] = k
        total = total + eval_expr(e.body, scope)
    return total


def _eval_call(e: Call, bindings) -> Polynomial:
    if e.func == "hyp2f1":
        a, upper, lower = (
            _int_arg(eval_expr(arg, bindings), arg, f"hyp2f1 argument {i + 1}")
            for i, arg in enumerate(e.args[:3])
        )
        if a > 0:
            raise _fail(e, f"hyp2f1 does not terminate: first argument {a} is positive")
        try:
            params = TerminatingF21Params(-a, upper, lower)
        except DomainError as exc:
            raise _fail(e, str(exc)) from None
        return hyp2f1_terminating(params)

    args = [
        _int_arg(eval_expr(arg, bindings), arg, f"{e.func} argument {i + 1}")
        for i, arg in enumerate(e.args)
    ]
    try:
        if e.func == "binom":
            value = binomial(*args)
        elif e.func == "poch":
            value = pochhammer(*args)
        elif e.func == "fact":
            value = factorial(*args)
        else:
            raise _fail(e, f"unknown function {e.func!r}")
    except DomainError as exc:
        raise _fail(e, f"{e.func}: {exc}") from None
    return Polynomial([value])


def _bound_value(bound, bindings) -> int:
    if isinstance(bound, Int):
        return bound.value
    return bindings[bound.name]


def enumerate_bindings(spec: IdentitySpec) -> Iterator[dict[str, int]]:
    """Walk the parameter box in declaration order, each range inclusive."""

    def walk(i: int, current: dict[str, int]):
        if i == len(spec.params):
            yield dict(current)
            return
        decl = spec.params[i]
        lo = _bound_value(decl.lo, current)
        hi = _bound_value(decl.hi, current)
        for v in range(lo, hi + 1):
            current[decl.name] = v
            yield from walk(i + 1, current)
        current.pop(decl.name, None)

    yield from walk(0, {})


def _tagged(exc: EvalError, spec: IdentitySpec, bindings) -> EvalError:
    where = ", ".join(f"{k}={v}" for k, v in bindings.items())
    return EvalError(f"{exc.message} [identity {spec.name!r} at {where}]", exc.line, exc.column)


def run_spec(spec: IdentitySpec) -> list[CheckReport]:
    reports = []
    for bindings in enumerate_bindings(spec):
        try:
            lhs = eval_expr(spec.lhs, bindings)
            rhs = eval_expr(spec.rhs, bindings)
        except EvalError as exc:
            raise _tagged(exc, spec, bindings) from None
        reports.append(CheckReport(params=bindings, lhs=lhs, rhs=rhs))
    return reports

