"""Finitely supported integer combinations over hashable keys."""
from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping


class LinComb(dict):
    """Sparse Z-linear combination ``{key: coeff}`` with no zero coefficients.

    ``basis`` is a free-form tag (``"perm"``, ``"F"``, ``"shsyt"``, ...) kept
    only for bookkeeping and serialization; arithmetic between different tags
    raises.
    """

    __slots__ = ("basis",)

    def __init__(self, terms: Mapping | Iterable = (), basis: str = ""):
        super().__init__()
        self.basis = basis
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            self.add_term(k, c)

    @classmethod
    def monomial(cls, key, coeff: int = 1, basis: str = "") -> "LinComb":
        return cls({key: coeff}, basis=basis)

    @classmethod
    def from_keys(cls, keys: Iterable, basis: str = "") -> "LinComb":
        out = cls(basis=basis)
        for k in keys:
            out.add_term(k, 1)
        return out

    def add_term(self, key, coeff: int) -> None:
        if coeff == 0:
            return
        c = self.get(key, 0) + coeff
        if c == 0:
            del self[key]
        else:
            self[key] = c

    def _tag(self, other: "LinComb") -> str:
        if self.basis and other.basis and self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        return self.basis or other.basis

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self.copy()
        out = LinComb(self, basis=self._tag(other))
        for k, c in other.items():
            out.add_term(k, c)
        return out

    __radd__ = __add__

    def __sub__(self, other):
        out = LinComb(self, basis=self._tag(other))
        for k, c in other.items():
            out.add_term(k, -c)
        return out

    def __neg__(self):
        return LinComb({k: -c for k, c in self.items()}, basis=self.basis)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return LinComb({k: scalar * c for k, c in self.items()}, basis=self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self
        return dict.__eq__(self, other)

    def __ne__(self, other):
        return not self == other

    __hash__ = None

    def copy(self) -> "LinComb":
        return LinComb(self, basis=self.basis)

    def iadd(self, other: Mapping, scale: int = 1) -> "LinComb":
        for k, c in other.items():
            self.add_term(k, scale * c)
        return self

    def map_keys(self, f: Callable, basis: str | None = None) -> "LinComb":
        """Linear extension of a key-to-key map (coefficients of merged keys add)."""
        out = LinComb(basis=self.basis if basis is None else basis)
        for k, c in self.items():
            out.add_term(f(k), c)
        return out

    def apply(self, f: Callable[..., Mapping], basis: str | None = None) -> "LinComb":
        """Linear extension of a key-to-combination map."""
        out = LinComb(basis=self.basis if basis is None else basis)
        for k, c in self.items():
            out.iadd(f(k), c)
        return out

    def sorted_items(self):
        return sorted(self.items(), key=lambda kc: _sort_key(kc[0]))

    def __repr__(self):
        if not self:
            return "0"
        parts = []
        for k, c in self.sorted_items():
            parts.append(f"{c}*{k!r}" if c != 1 else repr(k))
        return " + ".join(parts)


def _sort_key(k):
    if isinstance(k, tuple):
        return (len(k), tuple(_sort_key(x) for x in k))
    if hasattr(k, "rows"):
        return (getattr(k, "size", 0), k.rows)
    if hasattr(k, "elems"):
        return (k.n, k.elems)
    return (0, k)


def bilinear(f: Callable, a: Mapping, b: Mapping, basis: str = "") -> LinComb:
    """Bilinear extension of ``f(key_a, key_b) -> combination``."""
    out = LinComb(basis=basis)
    for ka, ca in a.items():
        for kb, cb in b.items():
            out.iadd(f(ka, kb), ca * cb)
    return out


def tensor_basis(a: str, b: str) -> str:
    """Tag of a tensor product, e.g. ``"shsyt.syt"``."""
    return f"{a}.{b}"


def tensor(a: "LinComb", b: "LinComb") -> LinComb:
    out = LinComb(basis=tensor_basis(a.basis, b.basis))
    for ka, ca in a.items():
        for kb, cb in b.items():
            out.add_term((ka, kb), ca * cb)
    return out


def map_tensor(f: Callable, g: Callable, t: Mapping, basis: str = "") -> LinComb:
    """(f tensor g) applied to a tensor element; f, g map keys to combinations."""
    out = LinComb(basis=basis)
    for (k1, k2), c in t.items():
        for a, ca in f(k1).items():
            for b, cb in g(k2).items():
                out.add_term((a, b), c * ca * cb)
    return out


def pairing(a: Mapping, b: Mapping) -> int:
    """Canonical pairing making the keys orthonormal."""
    if len(a) > len(b):
        a, b = b, a
    return sum(c * b.get(k, 0) for k, c in a.items())


def encode_key(k):
    """JSON form of a basis key (permutation, composition, tableau, set, or pair)."""
    if hasattr(k, "rows"):
        from .tableaux import to_json

        return to_json(k)
    if hasattr(k, "to_json"):
        return k.to_json()
    if isinstance(k, tuple) and len(k) == 2 and not all(isinstance(x, int) for x in k):
        return [encode_key(k[0]), encode_key(k[1])]
    return list(k)


PERM_BASES = {"perm", "word"}


def key_degree(k, basis: str = "") -> int:
    if hasattr(k, "rows"):
        return k.size
    if hasattr(k, "n"):
        return k.n
    if isinstance(k, tuple) and len(k) == 2 and not all(isinstance(x, int) for x in k):
        left, _, right = basis.partition(".")
        return key_degree(k[0], left) + key_degree(k[1], right or left)
    if basis in PERM_BASES:
        return len(k)
    return sum(k)


def _coeff(c):
    """Integers stay integers; other rationals become strings such as "1/4"."""
    if isinstance(c, int):
        return c
    if getattr(c, "denominator", None) == 1:
        return int(c)
    return str(c)


def to_json(x: LinComb, key_name: str = "key") -> dict:
    """``{"basis", "degree", "terms": [{key_name, "coeff"}]}``; degree is None if mixed."""
    degrees = {key_degree(k, x.basis) for k in x}
    return {
        "basis": x.basis,
        "degree": degrees.pop() if len(degrees) == 1 else None,
        "terms": [{key_name: encode_key(k), "coeff": _coeff(c)} for k, c in x.sorted_items()],
    }
