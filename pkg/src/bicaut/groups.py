"""Symbolic group expressions and the small DSL that serializes them.

An expression denotes a finite group built from symmetric groups by direct
products, wreath products with a full symmetric top, a wreath with the Klein
four-group acting regularly on four points, a Klein four-group semidirect
product with the fixed coordinate action on four-plus-two-plus-two slots, and
a generic semidirect product by a small named top group.  Equality of
expressions is structural equality after normalize(); abstract group
isomorphism beyond the normalization rewrites is out of scope.

Class tags:
  T        closed under products and wreaths-by-Sym starting from the trivial
           group (tree-realizable groups)
  B1       C x wrK4(D) with C, D in T
  B2       C x b2(D, H, K) with C, D, H, K in T and D nontrivial
  OutsideS anything else
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass


@dataclass(frozen=True)
class Trivial:
    pass


@dataclass(frozen=True)
class Sym:
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("Sym arity must be >= 2, got %d" % self.n)


@dataclass(frozen=True)
class Product:
    factors: tuple["GroupExpr", ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise ValueError("Product needs at least one factor")


@dataclass(frozen=True)
class Wreath:
    """base ^ n extended by Sym(n) permuting the copies."""

    base: "GroupExpr"
    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("Wreath arity must be >= 2, got %d" % self.n)


@dataclass(frozen=True)
class KleinWreath:
    """base ^ 4 extended by the Klein four-group acting regularly on the copies."""

    base: "GroupExpr"


@dataclass(frozen=True)
class KleinSemidirect:
    """(quad^4 x pair_h^2 x pair_k^2) extended by the Klein four-group.

    The Klein group {1, q1, q2, q3} acts by q1 = (d1 d2)(d3 d4)(h1 h2),
    q2 = (d1 d3)(d2 d4)(k1 k2), q3 = q1 q2; the quad slots carry a regular
    orbit, each pair is swapped by exactly two of the involutions.
    """

    quad: "GroupExpr"
    pair_h: "GroupExpr"
    pair_k: "GroupExpr"


@dataclass(frozen=True)
class Dihedral:
    """Symmetries of a regular n-gon, order 2n."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("Dihedral parameter must be >= 1")


_NAMED_TOP_SIZES = {
    "Z2": 2,
    "Z2xZ2": 4,
    "Z2wrZ2": 8,
    "S3": 6,
    "S3xZ2": 12,
    "Z6": 6,
}


def top_size(name: str) -> int:
    """Order of a named top group; supports Zk and dih(k) beyond the fixed set."""
    if name in _NAMED_TOP_SIZES:
        return _NAMED_TOP_SIZES[name]
    m = re.fullmatch(r"Z(\d+)", name)
    if m:
        k = int(m.group(1))
        if k >= 2:
            return k
    m = re.fullmatch(r"dih\((\d+)\)", name)
    if m:
        k = int(m.group(1))
        if k >= 1:
            return 2 * k
    raise ValueError("unknown top group name %r" % name)


@dataclass(frozen=True)
class TopGroup:
    """A small named group acting on the base factors of a SemiTop.

    perms, when present, lists the full element set as permutations of the
    base factor slots (identity included).  Normalization erases the action
    once its rewrites are done, so parsed and printed tops carry only a name.
    """

    name: str
    perms: tuple[tuple[int, ...], ...] = ()

    @property
    def size(self) -> int:
        return top_size(self.name)


@dataclass(frozen=True)
class SemiTop:
    """base extended by a small named top group (generic semidirect product)."""

    base: "GroupExpr"
    top: TopGroup


GroupExpr = (
    Trivial
    | Sym
    | Product
    | Wreath
    | KleinWreath
    | KleinSemidirect
    | Dihedral
    | SemiTop
)


def order(e: GroupExpr) -> int:
    """Group order of an expression (exact big integer)."""
    if isinstance(e, Trivial):
        return 1
    if isinstance(e, Sym):
        return math.factorial(e.n)
    if isinstance(e, Product):
        out = 1
        for f in e.factors:
            out *= order(f)
        return out
    if isinstance(e, Wreath):
        return order(e.base) ** e.n * math.factorial(e.n)
    if isinstance(e, KleinWreath):
        return order(e.base) ** 4 * 4
    if isinstance(e, KleinSemidirect):
        return order(e.quad) ** 4 * order(e.pair_h) ** 2 * order(e.pair_k) ** 2 * 4
    if isinstance(e, Dihedral):
        return 2 * e.n
    if isinstance(e, SemiTop):
        return order(e.base) * e.top.size
    raise TypeError("not a group expression: %r" % (e,))


def _factors(e: GroupExpr) -> tuple[GroupExpr, ...]:
    return e.factors if isinstance(e, Product) else (e,)


def _product(factors: list[GroupExpr]) -> GroupExpr:
    factors = [f for f in factors if not isinstance(f, Trivial)]
    if not factors:
        return Trivial()
    flat: list[GroupExpr] = []
    for f in factors:
        flat.extend(_factors(f))
    flat.sort(key=print_expr)
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def _wreath2(base: GroupExpr) -> GroupExpr:
    """base wr Sym(2), collapsing a trivial base."""
    return Sym(2) if isinstance(base, Trivial) else Wreath(base, 2)


# Named tops that are themselves expressible with products and wreaths.
def _top_as_expr(name: str) -> GroupExpr | None:
    if name == "Z2":
        return Sym(2)
    if name == "Z2xZ2":
        return Product((Sym(2), Sym(2)))
    if name == "Z2wrZ2":
        return Wreath(Sym(2), 2)
    if name == "S3":
        return Sym(3)
    if name == "S3xZ2":
        return Product((Sym(2), Sym(3)))
    m = re.fullmatch(r"dih\((\d+)\)", name)
    if m:
        return Dihedral(int(m.group(1)))
    return None


def normalize(e: GroupExpr) -> GroupExpr:
    """Canonical form: flatten and sort products, drop trivial parts, rewrite
    degenerate wreath and semidirect shapes into the plainest equivalent group.

    Idempotent, and order(normalize(e)) == order(e).
    """
    if isinstance(e, Trivial) or isinstance(e, Sym):
        return e
    if isinstance(e, Product):
        return _product([normalize(f) for f in e.factors])
    if isinstance(e, Wreath):
        base = normalize(e.base)
        if isinstance(base, Trivial):
            return Sym(e.n)
        return Wreath(base, e.n)
    if isinstance(e, KleinWreath):
        base = normalize(e.base)
        if isinstance(base, Trivial):
            return _product([Sym(2), Sym(2)])
        return KleinWreath(base)
    if isinstance(e, KleinSemidirect):
        quad = normalize(e.quad)
        h, k = sorted((normalize(e.pair_h), normalize(e.pair_k)), key=print_expr)
        if isinstance(quad, Trivial):
            # No regular orbit left: the two involutions act independently.
            return _product([_wreath2(h), _wreath2(k)])
        if isinstance(h, Trivial) and isinstance(k, Trivial):
            return KleinWreath(quad)
        return KleinSemidirect(quad, h, k)
    if isinstance(e, Dihedral):
        n = e.n
        if n == 1:
            return Sym(2)
        if n == 2:
            return _product([Sym(2), Sym(2)])
        if n == 3:
            return Sym(3)
        if n == 4:
            return Wreath(Sym(2), 2)
        if n == 6:
            return _product([Sym(2), Sym(3)])
        return e
    if isinstance(e, SemiTop):
        factors = [normalize(f) for f in _factors(e.base)]
        if all(isinstance(f, Trivial) for f in factors):
            rewritten = _top_as_expr(e.top.name)
            if rewritten is not None:
                return normalize(rewritten)
            return SemiTop(Trivial(), TopGroup(e.top.name))
        if e.top.size == 2 and e.top.perms:
            sigma = next((p for p in e.top.perms if p != tuple(range(len(p)))), None)
            if sigma is not None and len(sigma) == len(factors):
                fixed = [factors[i] for i in range(len(sigma)) if sigma[i] == i]
                reps = [factors[i] for i in range(len(sigma)) if sigma[i] > i]
                if all(
                    factors[i] == factors[sigma[i]]
                    for i in range(len(sigma))
                    if sigma[i] > i
                ):
                    return _product(fixed + [_wreath2(_product(reps))])
        return SemiTop(_product(factors), TopGroup(e.top.name))
    raise TypeError("not a group expression: %r" % (e,))


def _in_tree_class(e: GroupExpr) -> bool:
    if isinstance(e, (Trivial, Sym)):
        return True
    if isinstance(e, Product):
        return all(_in_tree_class(f) for f in e.factors)
    if isinstance(e, Wreath):
        return _in_tree_class(e.base)
    return False


def classify(e: GroupExpr) -> str:
    """Class tag of a normalized expression: 'T', 'B1', 'B2' or 'OutsideS'."""
    e = normalize(e)
    if _in_tree_class(e):
        return "T"
    factors = _factors(e)
    plain = [f for f in factors if _in_tree_class(f)]
    special = [f for f in factors if not _in_tree_class(f)]
    if len(special) != 1 or len(plain) != len(factors) - 1:
        return "OutsideS"
    s = special[0]
    if isinstance(s, KleinWreath) and _in_tree_class(s.base):
        return "B1"
    if (
        isinstance(s, KleinSemidirect)
        and _in_tree_class(s.quad)
        and _in_tree_class(s.pair_h)
        and _in_tree_class(s.pair_k)
    ):
        return "B2"
    return "OutsideS"


# --- DSL -----------------------------------------------------------------
#
# expr := "1" | "S" INT | expr "*" expr | "wr(" expr "," "S" INT ")"
#       | "wrK4(" expr ")" | "b2(" expr "," expr "," expr ")"
#       | "semi(" expr "," top ")" | "dih(" INT ")"
# top  := "Z2" | "Z2xZ2" | "Z2wrZ2" | "S3" | "S3xZ2" | "Z6" | "Z" INT
#       | "dih(" INT ")"
#
# "*" is left associative, whitespace is insignificant.  Positions in error
# messages are 1-based byte offsets.


class ExprSyntaxError(ValueError):
    def __init__(self, position: int, message: str):
        super().__init__("byte %d: %s" % (position, message))
        self.position = position


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([(),*]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            stripped = len(text) - len(text[pos:].lstrip())
            if stripped == len(text):
                break
            raise ExprSyntaxError(stripped + 1, "unexpected character %r" % text[stripped])
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1) + 1))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2) + 1))
        else:
            tokens.append(("punct", m.group(3), m.start(3) + 1))
        pos = m.end()
    tokens.append(("eof", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, val, pos = self.peek()
        if kind == "punct" and val == value:
            self.i += 1
            return
        raise ExprSyntaxError(pos, "expected %r" % value)

    def parse(self) -> GroupExpr:
        e = self.expr()
        kind, val, pos = self.peek()
        if kind != "eof":
            raise ExprSyntaxError(pos, "expected '*' or end of input")
        return e

    def expr(self) -> GroupExpr:
        factors = [self.atom()]
        while True:
            kind, val, pos = self.peek()
            if kind == "punct" and val == "*":
                self.i += 1
                factors.append(self.atom())
            else:
                break
        if len(factors) == 1:
            return factors[0]
        return Product(tuple(factors))

    def sym(self) -> Sym:
        kind, val, pos = self.take()
        m = re.fullmatch(r"S(\d+)", val) if kind == "name" else None
        if m is None:
            raise ExprSyntaxError(pos, "expected a symmetric group like 'S2'")
        n = int(m.group(1))
        if n < 2:
            raise ExprSyntaxError(pos, "symmetric group arity must be >= 2, got S%d" % n)
        return Sym(n)

    def top(self) -> TopGroup:
        kind, val, pos = self.take()
        if kind != "name":
            raise ExprSyntaxError(pos, "expected a top group name")
        if val == "dih":
            self.expect("(")
            k = self.int_token()
            self.expect(")")
            return TopGroup("dih(%d)" % k)
        try:
            top_size(val)
        except ValueError:
            raise ExprSyntaxError(pos, "unknown top group %r" % val) from None
        return TopGroup(val)

    def int_token(self) -> int:
        kind, val, pos = self.take()
        if kind != "int":
            raise ExprSyntaxError(pos, "expected an integer")
        return int(val)

    def atom(self) -> GroupExpr:
        kind, val, pos = self.peek()
        if kind == "int" and val == "1":
            self.take()
            return Trivial()
        if kind == "name":
            if val == "wr":
                self.take()
                self.expect("(")
                base = self.expr()
                self.expect(",")
                s = self.sym()
                self.expect(")")
                return Wreath(base, s.n)
            if val == "wrK4":
                self.take()
                self.expect("(")
                base = self.expr()
                self.expect(")")
                return KleinWreath(base)
            if val == "b2":
                self.take()
                self.expect("(")
                quad = self.expr()
                self.expect(",")
                h = self.expr()
                self.expect(",")
                k = self.expr()
                self.expect(")")
                return KleinSemidirect(quad, h, k)
            if val == "semi":
                self.take()
                self.expect("(")
                base = self.expr()
                self.expect(",")
                top = self.top()
                self.expect(")")
                return SemiTop(base, top)
            if val == "dih":
                self.take()
                self.expect("(")
                k = self.int_token()
                self.expect(")")
                if k < 1:
                    raise ExprSyntaxError(pos, "dihedral parameter must be >= 1")
                return Dihedral(k)
            return self.sym()
        raise ExprSyntaxError(pos, "expected an expression")


def parse_expr(text: str) -> GroupExpr:
    """Parse the DSL; raises ExprSyntaxError with a 1-based byte position."""
    return _Parser(text).parse()


def print_expr(e: GroupExpr) -> str:
    """Serialize an expression; parse_expr(print_expr(e)) round-trips
    up to normalize()."""
    if isinstance(e, Trivial):
        return "1"
    if isinstance(e, Sym):
        return "S%d" % e.n
    if isinstance(e, Product):
        return "*".join(print_expr(f) for f in e.factors)
    if isinstance(e, Wreath):
        return "wr(%s,S%d)" % (print_expr(e.base), e.n)
    if isinstance(e, KleinWreath):
        return "wrK4(%s)" % print_expr(e.base)
    if isinstance(e, KleinSemidirect):
        return "b2(%s,%s,%s)" % (
            print_expr(e.quad),
            print_expr(e.pair_h),
            print_expr(e.pair_k),
        )
    if isinstance(e, Dihedral):
        return "dih(%d)" % e.n
    if isinstance(e, SemiTop):
        return "semi(%s,%s)" % (print_expr(e.base), e.top.name)
    raise TypeError("not a group expression: %r" % (e,))
