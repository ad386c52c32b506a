"""Finite commutative ring construction and validation.

A ring is stored as a pair of dense element-indexed Cayley tables (addition
and multiplication), which makes every later phase — ideal enumeration,
annihilators, graph adjacency — a table lookup.  Four constructors are
supported:

* ``zmod``: the modular ring Z_n,
* ``product``: a finite direct product with mixed-radix element encoding,
* ``poly_quotient``: Z_m[x] modulo a monic polynomial,
* ``structure``: an additive direct sum of cyclic groups with multiplication
  given by structure constants on a basis.

Every builder validates the resulting tables before returning; validation for
structure rings checks associativity/distributivity on basis pairs/triples
only, which suffices because the general case follows by bilinearity once the
torsion-compatibility condition on the constants holds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np

from .errors import AxiomViolationError, InvalidSpecError, ResourceLimitError

DEFAULT_MAX_ORDER = 4096

_BASIS_NAMES = "xyzwvutsrqponm"


# --------------------------------------------------------------------------
# ring specifications


@dataclass(frozen=True)
class ZmodSpec:
    n: int
    name: str = ""


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple["RingSpec", ...]
    name: str = ""


@dataclass(frozen=True)
class PolyQuotientSpec:
    base_mod: int
    modulus: tuple[int, ...]  # coefficients c0..cd, monic: cd == 1
    name: str = ""


@dataclass(frozen=True)
class StructureSpec:
    orders: tuple[int, ...]
    one: int
    table: tuple[tuple[tuple[int, ...], ...], ...]
    name: str = ""


RingSpec = Union[ZmodSpec, ProductSpec, PolyQuotientSpec, StructureSpec]


def _poly_text(coeffs) -> str:
    """Render a little-endian coefficient list as a polynomial in x."""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append("x" if c == 1 else f"{c}x")
        else:
            terms.append(f"x^{k}" if c == 1 else f"{c}x^{k}")
    return "+".join(terms) if terms else "0"


def spec_name(spec: RingSpec) -> str:
    """The declared name of a spec, or a synthesized canonical one."""
    if spec.name:
        return spec.name
    if isinstance(spec, ZmodSpec):
        return f"Z{spec.n}"
    if isinstance(spec, ProductSpec):
        return "x".join(spec_name(f) for f in spec.factors)
    if isinstance(spec, PolyQuotientSpec):
        return f"Z{spec.base_mod}[x]/({_poly_text(spec.modulus)})"
    if isinstance(spec, StructureSpec):
        return "structure(" + ",".join(str(m) for m in spec.orders) + ")"
    raise TypeError(f"not a ring spec: {spec!r}")


def parse_ring_spec(doc: dict, default_name: str = "") -> RingSpec:
    """Parse one ring-spec document (a mapping); unknown fields are rejected."""
    if not isinstance(doc, dict):
        raise InvalidSpecError(f"ring spec must be an object, got {type(doc).__name__}")
    keys = set(doc)
    name = doc.get("name", default_name)
    if not isinstance(name, str):
        raise InvalidSpecError("ring spec 'name' must be a string")
    body = keys - {"name"}
    if body == {"zmod"}:
        n = doc["zmod"]
        if not isinstance(n, int) or n < 2:
            raise InvalidSpecError(f"zmod order must be an integer >= 2, got {n!r}")
        return ZmodSpec(n=n, name=name)
    if body == {"product"}:
        factors = doc["product"]
        if not isinstance(factors, list) or len(factors) < 2:
            raise InvalidSpecError("product requires a list of at least 2 factor specs")
        return ProductSpec(factors=tuple(parse_ring_spec(f) for f in factors), name=name)
    if body == {"poly_quotient"}:
        inner = doc["poly_quotient"]
        if not isinstance(inner, dict) or set(inner) != {"base_mod", "modulus"}:
            raise InvalidSpecError("poly_quotient requires exactly {base_mod, modulus}")
        m = inner["base_mod"]
        mod = inner["modulus"]
        if not isinstance(m, int) or m < 2:
            raise InvalidSpecError(f"poly_quotient base_mod must be >= 2, got {m!r}")
        if (not isinstance(mod, list) or len(mod) < 2
                or not all(isinstance(c, int) for c in mod)):
            raise InvalidSpecError("poly_quotient modulus must be an integer list of degree >= 1")
        if mod[-1] != 1:
            raise InvalidSpecError("poly_quotient modulus must be monic (trailing coefficient 1)")
        return PolyQuotientSpec(base_mod=m, modulus=tuple(c % m for c in mod[:-1]) + (1,), name=name)
    if body == {"structure"}:
        inner = doc["structure"]
        if not isinstance(inner, dict) or set(inner) != {"orders", "one", "table"}:
            raise InvalidSpecError("structure requires exactly {orders, one, table}")
        orders = inner["orders"]
        one = inner["one"]
        table = inner["table"]
        if (not isinstance(orders, list) or not orders
                or not all(isinstance(m, int) and m >= 1 for m in orders)):
            raise InvalidSpecError("structure orders must be positive integers")
        k = len(orders)
        if not isinstance(one, int) or not 0 <= one < k:
            raise InvalidSpecError(f"structure identity index out of range: {one!r}")
        if not isinstance(table, list) or len(table) != k:
            raise InvalidSpecError(f"structure table must be {k}x{k} coefficient vectors")
        rows = []
        for i, row in enumerate(table):
            if not isinstance(row, list) or len(row) != k:
                raise InvalidSpecError(f"structure table row {i} must have {k} entries")
            entries = []
            for j, vec in enumerate(row):
                if (not isinstance(vec, list) or len(vec) != k
                        or not all(isinstance(c, int) for c in vec)):
                    raise InvalidSpecError(f"structure table entry ({i},{j}) must be a length-{k} vector")
                if any(not 0 <= c < m for c, m in zip(vec, orders)):
                    raise InvalidSpecError(f"structure table entry ({i},{j}) not reduced mod orders")
                entries.append(tuple(vec))
            rows.append(tuple(entries))
        return StructureSpec(orders=tuple(orders), one=one, table=tuple(rows), name=name)
    raise InvalidSpecError(
        f"ring spec must contain exactly one of zmod/product/poly_quotient/structure, got {sorted(body)}")


def ring_spec_to_dict(spec: RingSpec) -> dict:
    """Inverse of :func:`parse_ring_spec`; emits the documented file layout."""
    if isinstance(spec, ZmodSpec):
        out = {"name": spec_name(spec), "zmod": spec.n}
    elif isinstance(spec, ProductSpec):
        out = {"name": spec_name(spec), "product": [ring_spec_to_dict(f) for f in spec.factors]}
    elif isinstance(spec, PolyQuotientSpec):
        out = {"name": spec_name(spec),
               "poly_quotient": {"base_mod": spec.base_mod, "modulus": list(spec.modulus)}}
    elif isinstance(spec, StructureSpec):
        out = {"name": spec_name(spec),
               "structure": {"orders": list(spec.orders), "one": spec.one,
                             "table": [[list(v) for v in row] for row in spec.table]}}
    else:
        raise TypeError(f"not a ring spec: {spec!r}")
    return out


def load_ring_spec(path: str) -> RingSpec:
    """Load a ring spec from a JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidSpecError(f"cannot read ring spec {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidSpecError(
            f"ring spec {path} is not valid JSON (line {exc.lineno}, column {exc.colno}): {exc.msg}") from exc
    return parse_ring_spec(doc)


# --------------------------------------------------------------------------
# the ring object


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite commutative ring with identity, as dense index tables."""

    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    labels: tuple[str, ...]
    spec: RingSpec

    @property
    def name(self) -> str:
        return spec_name(self.spec)

    def label(self, i: int) -> str:
        return self.labels[i]

    @cached_property
    def characteristic(self) -> int:
        """Additive order of the multiplicative identity."""
        k, x = 1, self.one
        while x != self.zero:
            x = int(self.add[x, self.one])
            k += 1
        return k

    @cached_property
    def neg(self) -> np.ndarray:
        """Additive inverse of each element."""
        rows, cols = np.nonzero(self.add == self.zero)
        out = np.empty(self.order, dtype=np.int32)
        out[rows] = cols
        return out

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, order={self.order})"


# --------------------------------------------------------------------------
# axiom validation


@dataclass(frozen=True)
class Violation:
    axiom: str
    elements: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    mode: str
    violation: Violation | None = None


def _first_assoc_violation(table: np.ndarray):
    """First (a,b,c) with table[table[a,b],c] != table[a,table[b,c]], or None.

    Scans one row of the O(n^3) identity per step so gather buffers stay
    cache-resident; lhs[b] is the row of a*b, rhs[b,c] is a*(b*c).
    """
    n = table.shape[0]
    for a in range(n):
        lhs = table[table[a]]
        rhs = table[a][table]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            return (a, int(b), int(c))
    return None


def _first_distrib_violation(mul: np.ndarray, add: np.ndarray, rows=None):
    """First (a,b,c) with a*(b+c) != a*b + a*c, scanning a over ``rows``."""
    n = mul.shape[0]
    a_values = range(n) if rows is None else rows
    for a in a_values:
        prods = mul[a]
        lhs = prods[add]
        rhs = add[prods[:, None], prods[None, :]]
        if not np.array_equal(lhs, rhs):
            b, c = np.argwhere(lhs != rhs)[0]
            return (int(a), int(b), int(c))
    return None


def validate_ring_axioms(ring: FiniteRing, mode: str = "auto") -> ValidationReport:
    """Check the commutative-ring axioms on a ring's tables.

    ``mode`` is ``"full"`` (all triples), ``"basis"`` (structure-constant
    shortcut: associativity and distributivity on basis triples only, which
    extends to all elements by bilinearity of the constructed product), or
    ``"auto"`` (basis for structure rings, full otherwise).  Violations are
    returned, not raised.
    """
    if mode == "auto":
        mode = "basis" if isinstance(ring.spec, StructureSpec) else "full"
    n = ring.order
    add, mul = ring.add, ring.mul

    def fail(axiom, elements, detail):
        return ValidationReport(False, mode, Violation(axiom, tuple(int(e) for e in elements), detail))

    for tname, t in (("add", add), ("mul", mul)):
        if t.shape != (n, n):
            return fail("shape", (), f"{tname} table is not {n}x{n}")
        if t.size and (t.min() < 0 or t.max() >= n):
            return fail("closure", (), f"{tname} table contains out-of-range entries")

    if not np.array_equal(add, add.T):
        a, b = np.argwhere(add != add.T)[0]
        return fail("add-commutativity", (a, b), f"a+b != b+a at ({a},{b})")
    if not np.array_equal(add[ring.zero], np.arange(n)):
        a = int(np.argwhere(add[ring.zero] != np.arange(n))[0][0])
        return fail("add-identity", (a,), f"0+{ring.labels[a]} != {ring.labels[a]}")
    missing = np.flatnonzero(~(add == ring.zero).any(axis=1))
    if missing.size:
        a = int(missing[0])
        return fail("add-inverse", (a,), f"{ring.labels[a]} has no additive inverse")

    if not np.array_equal(mul, mul.T):
        a, b = np.argwhere(mul != mul.T)[0]
        return fail("mul-commutativity", (a, b),
                    f"{ring.labels[a]}*{ring.labels[b]} != {ring.labels[b]}*{ring.labels[a]}")
    if not np.array_equal(mul[ring.one], np.arange(n)):
        a = int(np.argwhere(mul[ring.one] != np.arange(n))[0][0])
        return fail("mul-identity", (a,), f"1*{ring.labels[a]} != {ring.labels[a]}")
    if ring.zero == ring.one:
        return fail("nontrivial", (), "zero equals one")

    if mode == "basis":
        spec = ring.spec
        if not isinstance(spec, StructureSpec):
            raise ValueError("basis validation requires a structure-ring spec")
        basis = _structure_basis_indices(spec)
        for bi in basis:
            for bj in basis:
                for bk in basis:
                    if mul[mul[bi, bj], bk] != mul[bi, mul[bj, bk]]:
                        return fail("mul-associativity", (bi, bj, bk),
                                    "basis triple fails associativity")
        bad = _first_distrib_violation(mul, add, rows=basis)
        if bad is not None:
            return fail("distributivity", bad, "basis element fails left distributivity")
        return ValidationReport(True, "basis(bilinear-extension)")

    bad = _first_assoc_violation(add)
    if bad is not None:
        return fail("add-associativity", bad, "(a+b)+c != a+(b+c)")
    bad = _first_assoc_violation(mul)
    if bad is not None:
        return fail("mul-associativity", bad, "(a*b)*c != a*(b*c)")
    bad = _first_distrib_violation(mul, add)
    if bad is not None:
        return fail("distributivity", bad, "a*(b+c) != a*b + a*c")
    return ValidationReport(True, "full")


def _finalize(ring: FiniteRing, mode: str = "auto") -> FiniteRing:
    ring.add.setflags(write=False)
    ring.mul.setflags(write=False)
    report = validate_ring_axioms(ring, mode=mode)
    if not report.ok:
        v = report.violation
        names = ", ".join(ring.labels[e] for e in v.elements) if v.elements else "-"
        raise AxiomViolationError(f"{ring.name}: {v.axiom} violated at ({names}): {v.detail}", v)
    return ring


# --------------------------------------------------------------------------
# builders


def build_zmod(n: int, name: str = "", max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """The modular ring Z_n for n >= 2."""
    if not isinstance(n, int) or n < 2:
        raise InvalidSpecError(f"zmod order must be an integer >= 2, got {n!r}")
    if n > max_order:
        raise ResourceLimitError(f"Z{n} exceeds the element cap of {max_order}")
    idx = np.arange(n, dtype=np.int32)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    spec = ZmodSpec(n=n, name=name)
    labels = tuple(str(i) for i in range(n))
    return _finalize(FiniteRing(n, add.astype(np.int32), mul.astype(np.int32), 0, 1 % n, labels, spec))


def build_product(factors: list[FiniteRing], name: str = "",
                  max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Direct product of two or more rings, mixed-radix encoded.

    The first factor is the least significant digit, so nesting products is
    index-transparent: product(A, product(B, C)) and product(A, B, C) yield
    identical tables.
    """
    if len(factors) < 2:
        raise InvalidSpecError("product requires at least 2 factors")
    order = 1
    for f in factors:
        order *= f.order
    if order > max_order:
        raise ResourceLimitError(f"product of order {order} exceeds the element cap of {max_order}")

    idx = np.arange(order, dtype=np.int64)
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    stride = 1
    digits = []
    for f in factors:
        d = (idx // stride) % f.order
        digits.append(d)
        add += stride * f.add[d[:, None], d[None, :]].astype(np.int64)
        mul += stride * f.mul[d[:, None], d[None, :]].astype(np.int64)
        stride *= f.order

    labels = []
    for e in range(order):
        parts = [f.labels[int(d[e])] for f, d in zip(factors, digits)]
        labels.append("(" + ",".join(parts) + ")")
    stride = 1
    zero = one = 0
    for f in factors:
        zero += stride * f.zero
        one += stride * f.one
        stride *= f.order
    spec = ProductSpec(factors=tuple(f.spec for f in factors), name=name)
    return _finalize(FiniteRing(order, add.astype(np.int32), mul.astype(np.int32),
                                zero, one, tuple(labels), spec))


def _poly_mul_mod(a, b, modulus, m):
    """Product of little-endian coefficient vectors mod (modulus, m)."""
    d = len(modulus) - 1
    conv = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                conv[i + j] = (conv[i + j] + ca * cb) % m
    # reduce by the monic modulus from the top
    for k in range(len(conv) - 1, d - 1, -1):
        c = conv[k]
        if c:
            conv[k] = 0
            for t in range(d):
                conv[k - d + t] = (conv[k - d + t] - c * modulus[t]) % m
    out = conv[:d] + [0] * max(0, d - len(conv))
    return tuple(out)


def build_poly_quotient(base: FiniteRing, modulus, name: str = "",
                        max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Z_m[x] / (f) for a monic f of degree >= 1 over a zmod base."""
    if not isinstance(base.spec, ZmodSpec):
        raise InvalidSpecError("poly_quotient base must be a zmod ring")
    m = base.order
    modulus = tuple(int(c) % m if i < len(modulus) - 1 else int(c)
                    for i, c in enumerate(modulus))
    if len(modulus) < 2 or modulus[-1] != 1:
        raise InvalidSpecError("poly_quotient modulus must be monic of degree >= 1")
    d = len(modulus) - 1
    order = m ** d
    if order > max_order:
        raise ResourceLimitError(f"poly quotient of order {order} exceeds the element cap of {max_order}")

    def decode(e):
        coeffs = []
        for _ in range(d):
            coeffs.append(e % m)
            e //= m
        return tuple(coeffs)

    def encode(coeffs):
        e = 0
        for c in reversed(coeffs):
            e = e * m + (c % m)
        return e

    elems = [decode(e) for e in range(order)]
    add = np.zeros((order, order), dtype=np.int32)
    mul = np.zeros((order, order), dtype=np.int32)
    for i, a in enumerate(elems):
        for j in range(i, order):
            b = elems[j]
            s = encode(tuple((ca + cb) % m for ca, cb in zip(a, b)))
            p = encode(_poly_mul_mod(a, b, modulus, m))
            add[i, j] = add[j, i] = s
            mul[i, j] = mul[j, i] = p
    labels = tuple(_poly_text(e) for e in elems)
    spec = PolyQuotientSpec(base_mod=m, modulus=modulus, name=name)
    return _finalize(FiniteRing(order, add, mul, 0, 1, labels, spec))


def _structure_basis_indices(spec: StructureSpec) -> list[int]:
    strides = []
    s = 1
    for m in spec.orders:
        strides.append(s)
        s *= m
    return [strides[i] for i in range(len(spec.orders))]


def _structure_labels(spec: StructureSpec) -> tuple[str, ...]:
    k = len(spec.orders)
    names = [""] * k
    names[spec.one] = "1"
    letter = 0
    for i in range(k):
        if i == spec.one:
            continue
        names[i] = _BASIS_NAMES[letter] if letter < len(_BASIS_NAMES) else f"b{i}"
        letter += 1

    order = 1
    for m in spec.orders:
        order *= m
    labels = []
    for e in range(order):
        rem, coeffs = e, []
        for m in spec.orders:
            coeffs.append(rem % m)
            rem //= m
        terms = []
        for i in range(k):
            c = coeffs[i]
            if c == 0 or i == spec.one:
                continue
            terms.append(names[i] if c == 1 else f"{c}{names[i]}")
        if coeffs[spec.one]:
            terms.append(str(coeffs[spec.one]))
        labels.append("+".join(terms) if terms else "0")
    return tuple(labels)


def build_structure_ring(orders, one_index: int, table, name: str = "",
                         max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Ring from structure constants on a basis of cyclic generators.

    ``orders`` gives the additive order of each basis element, ``one_index``
    selects the basis element acting as 1, and ``table[i][j]`` is the
    coefficient vector of the product of basis elements i and j.  The
    multiplication of arbitrary elements is the bilinear extension; for it to
    be well defined on residues the constants must satisfy
    m_i * table[i][j] = 0 componentwise, which is checked here.
    """
    spec = parse_ring_spec({"name": name, "structure": {
        "orders": list(orders), "one": one_index,
        "table": [[list(v) for v in row] for row in table]}})
    assert isinstance(spec, StructureSpec)
    k = len(spec.orders)
    order = 1
    for m in spec.orders:
        order *= m
    if order > max_order:
        raise ResourceLimitError(f"structure ring of order {order} exceeds the element cap of {max_order}")

    t = np.array(spec.table, dtype=np.int64)  # (k, k, k)
    for i in range(k):
        for j in range(k):
            if not np.array_equal(t[i, j], t[j, i]):
                raise AxiomViolationError(
                    f"{spec_name(spec)}: mul-commutativity violated on basis pair ({i},{j})",
                    Violation("mul-commutativity", (i, j), "structure table is not symmetric"))
            for l in range(k):
                for mult in (spec.orders[i], spec.orders[j]):
                    if (mult * t[i, j, l]) % spec.orders[l] != 0:
                        raise AxiomViolationError(
                            f"{spec_name(spec)}: bilinear extension ill-defined on basis pair "
                            f"({i},{j}): {mult}*table[{i}][{j}][{l}] != 0 mod {spec.orders[l]}",
                            Violation("distributivity", (i, j),
                                      "structure constants incompatible with additive orders"))
    expected_one = np.zeros(k, dtype=np.int64)
    expected_one[spec.one] = 1 % spec.orders[spec.one]
    for j in range(k):
        unit = np.zeros(k, dtype=np.int64)
        unit[j] = 1 % spec.orders[j]
        if not np.array_equal(t[spec.one, j] % np.array(spec.orders), unit):
            raise AxiomViolationError(
                f"{spec_name(spec)}: mul-identity violated on basis pair ({spec.one},{j})",
                Violation("mul-identity", (spec.one, j), "identity row of structure table is not a unit vector"))

    orders_arr = np.array(spec.orders, dtype=np.int64)
    coeffs = np.zeros((order, k), dtype=np.int64)
    rem = np.arange(order)
    for i, m in enumerate(spec.orders):
        coeffs[:, i] = rem % m
        rem = rem // m
    strides = np.ones(k, dtype=np.int64)
    for i in range(1, k):
        strides[i] = strides[i - 1] * spec.orders[i - 1]

    def encode_rows(vecs):
        return ((vecs % orders_arr) @ strides).astype(np.int32)

    add = np.zeros((order, order), dtype=np.int32)
    mul = np.zeros((order, order), dtype=np.int32)
    block = max(1, (1 << 21) // max(1, order * k))  # keep gather buffers small
    for start in range(0, order, block):
        chunk = coeffs[start:start + block]
        add[start:start + block] = encode_rows(chunk[:, None, :] + coeffs[None, :, :])
        prod_vec = np.einsum("ei,fj,ijl->efl", chunk, coeffs, t)
        mul[start:start + block] = encode_rows(prod_vec)

    zero = 0
    one = int(strides[spec.one])
    ring = FiniteRing(order, add.astype(np.int32), mul, zero, one, _structure_labels(spec), spec)
    return _finalize(ring, mode="basis")


def build_ring(spec: RingSpec, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Build any ring spec, recursing into product factors."""
    if isinstance(spec, ZmodSpec):
        return build_zmod(spec.n, name=spec.name, max_order=max_order)
    if isinstance(spec, ProductSpec):
        factors = [build_ring(f, max_order=max_order) for f in spec.factors]
        return build_product(factors, name=spec.name, max_order=max_order)
    if isinstance(spec, PolyQuotientSpec):
        base = build_zmod(spec.base_mod, max_order=max_order)
        return build_poly_quotient(base, spec.modulus, name=spec.name, max_order=max_order)
    if isinstance(spec, StructureSpec):
        return build_structure_ring(spec.orders, spec.one, spec.table,
                                    name=spec.name, max_order=max_order)
    raise TypeError(f"not a ring spec: {spec!r}")
