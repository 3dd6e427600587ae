"""Syntax tree for identity files.

Every node records the line and column where it starts.  Positions are
excluded from equality so that a re-parsed pretty-print compares equal to
the original tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

FUNCTIONS = {"binom": 2, "poch": 2, "fact": 1, "hyp2f1": 4, "sum": 4}


@dataclass(frozen=True)
class Node:
    line: int = field(default=0, compare=False, kw_only=True)
    column: int = field(default=0, compare=False, kw_only=True)


@dataclass(frozen=True)
class Int(Node):
    value: int


@dataclass(frozen=True)
class Name(Node):
    """Reference to a parameter or a summation index."""

    name: str


@dataclass(frozen=True)
class Var(Node):
    """The formal variable x."""


@dataclass(frozen=True)
class Neg(Node):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Node):
    op: str  # one of + - * / ^
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Node):
    func: str  # binom, poch, fact or hyp2f1
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class Sum(Node):
    index: str
    lo: Expr
    hi: Expr
    body: Expr


Expr = Union[Int, Name, Var, Neg, BinOp, Call, Sum]
Bound = Union[Int, Name]


@dataclass(frozen=True)
class ParamDecl(Node):
    name: str
    lo: Bound
    hi: Bound


@dataclass(frozen=True)
class IdentitySpec(Node):
    name: str
    params: tuple[ParamDecl, ...]
    lhs: Expr
    rhs: Expr

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)


def sum_indices(e: Expr) -> set[str]:
    if isinstance(e, Sum):
        return {e.index} | sum_indices(e.lo) | sum_indices(e.hi) | sum_indices(e.body)
    if isinstance(e, Neg):
        return sum_indices(e.operand)
    if isinstance(e, BinOp):
        return sum_indices(e.left) | sum_indices(e.right)
    if isinstance(e, Call):
        out: set[str] = set()
        for a in e.args:
            out |= sum_indices(a)
        return out
    return set()
