"""Recursive-descent parser for ``.hvd`` identity files.

Grammar::

    file     := identity+
    identity := "identity" STRING "{" "params" param ("," param)* ";"
                "lhs" "=" expr ";" "rhs" "=" expr ";" "}"
    param    := IDENT "in" bound ".." bound
    bound    := INT | IDENT
    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" unary)?
    atom     := INT | IDENT | "x" | "(" expr ")" | call
    call     := FUNC "(" expr ("," expr)* ")"
"""

from __future__ import annotations

from .ast import (
    FUNCTIONS, BinOp, Call, IdentitySpec, Int, Name, Neg, ParamDecl, Sum, Var,
    sum_indices,
)
from .errors import ParseError
from .lexer import Token, tokenize

# Report fields share the JSON object with parameter bindings.
_RESERVED_PARAMS = {"x", "difference", "equal"} | set(FUNCTIONS)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.line, tok.column)

    def at(self, kind: str, value: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (value is None or t.value == value)

    def expect(self, kind: str, value: str | None = None, what: str | None = None) -> Token:
        if not self.at(kind, value):
            wanted = what or (repr(value) if value is not None else kind.lower())
            raise self.error(f"expected {wanted}, found {self.tok}")
        return self.advance()

    # file structure

    def parse_file(self) -> list[IdentitySpec]:
        specs = [self.parse_identity()]
        while not self.at("EOF"):
            specs.append(self.parse_identity())
        return specs

    def parse_identity(self) -> IdentitySpec:
        start = self.expect("KEYWORD", "identity")
        name = self.expect("STRING", what="identity name string").value
        self.expect("OP", "{")
        self.expect("KEYWORD", "params")
        decls = [self.parse_param([])]
        while self.at("OP", ","):
            self.advance()
            decls.append(self.parse_param(decls))
        self.expect("OP", ";")
        self.expect("KEYWORD", "lhs", what="'lhs' clause")
        self.expect("OP", "=")
        lhs = self.parse_expr()
        self.expect("OP", ";")
        self.expect("KEYWORD", "rhs", what="'rhs' clause")
        self.expect("OP", "=")
        rhs = self.parse_expr()
        self.expect("OP", ";")
        self.expect("OP", "}")

        indices = sum_indices(lhs) | sum_indices(rhs)
        for d in decls:
            if d.name in indices:
                raise ParseError(
                    f"parameter {d.name!r} is also used as a summation index",
                    d.line, d.column,
                )
        return IdentitySpec(
            name, tuple(decls), lhs, rhs, line=start.line, column=start.column
        )

    def parse_param(self, earlier: list[ParamDecl]) -> ParamDecl:
        tok = self.expect("IDENT", what="parameter name")
        if tok.value in _RESERVED_PARAMS:
            raise self.error(f"{tok.value!r} cannot be used as a parameter name", tok)
        if any(d.name == tok.value for d in earlier):
            raise self.error(f"duplicate parameter {tok.value!r}", tok)
        self.expect("KEYWORD", "in")
        lo = self.parse_bound(earlier)
        self.expect("OP", "..")
        hi = self.parse_bound(earlier)
        return ParamDecl(tok.value, lo, hi, line=tok.line, column=tok.column)

    def parse_bound(self, earlier: list[ParamDecl]):
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            return Int(int(tok.value), line=tok.line, column=tok.column)
        if tok.kind == "IDENT":
            if not any(d.name == tok.value for d in earlier):
                raise self.error(
                    f"range bound {tok.value!r} is not a previously declared parameter", tok
                )
            self.advance()
            return Name(tok.value, line=tok.line, column=tok.column)
        raise self.error(f"expected integer or parameter name as range bound, found {tok}")

    # expressions

    def parse_expr(self):
        left = self.parse_term()
        while self.at("OP", "+") or self.at("OP", "-"):
            op = self.advance()
            right = self.parse_term()
            left = BinOp(op.value, left, right, line=op.line, column=op.column)
        return left

    def parse_term(self):
        left = self.parse_unary()
        while self.at("OP", "*") or self.at("OP", "/"):
            op = self.advance()
            right = self.parse_unary()
            left = BinOp(op.value, left, right, line=op.line, column=op.column)
        return left

    def parse_unary(self):
        if self.at("OP", "-"):
            op = self.advance()
            return Neg(self.parse_unary(), line=op.line, column=op.column)
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.at("OP", "^"):
            op = self.advance()
            exponent = self.parse_unary()
            return BinOp("^", base, exponent, line=op.line, column=op.column)
        return base

    def parse_atom(self):
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            return Int(int(tok.value), line=tok.line, column=tok.column)
        if self.at("OP", "("):
            self.advance()
            inner = self.parse_expr()
            self.expect("OP", ")")
            return inner
        if tok.kind == "IDENT":
            self.advance()
            if self.at("OP", "("):
                return self.parse_call(tok)
            if tok.value in FUNCTIONS:
                raise self.error(f"expected '(' after function {tok.value!r}")
            if tok.value == "x":
                return Var(line=tok.line, column=tok.column)
            return Name(tok.value, line=tok.line, column=tok.column)
        raise self.error(f"expected an expression, found {tok}")

    def parse_call(self, name: Token):
        if name.value not in FUNCTIONS:
            raise self.error(f"unknown function {name.value!r}", name)
        self.expect("OP", "(")
        args = [self.parse_expr()]
        while self.at("OP", ","):
            self.advance()
            args.append(self.parse_expr())
        self.expect("OP", ")")
        arity = FUNCTIONS[name.value]
        if len(args) != arity:
            raise self.error(
                f"{name.value} takes {arity} argument{'s' if arity > 1 else ''}, got {len(args)}",
                name,
            )
        pos = {"line": name.line, "column": name.column}
        if name.value == "sum":
            index = args[0]
            if not isinstance(index, Name):
                raise ParseError(
                    "first argument of sum must be an index name",
                    index.line or name.line, index.column or name.column,
                )
            return Sum(index.name, args[1], args[2], args[3], **pos)
        if name.value == "hyp2f1" and not isinstance(args[3], Var):
            raise ParseError(
                "fourth argument of hyp2f1 must be the variable x",
                args[3].line or name.line, args[3].column or name.column,
            )
        return Call(name.value, tuple(args), **pos)


def parse_identity_file(source: str) -> list[IdentitySpec]:
    """Parse every ``identity`` block in ``source``, in order."""
    return _Parser(tokenize(source)).parse_file()


def parse_expression(source: str):
    """Parse a standalone expression (handy for tests and interactive use)."""
    p = _Parser(tokenize(source))
    e = p.parse_expr()
    p.expect("EOF", what="end of input")
    return e
