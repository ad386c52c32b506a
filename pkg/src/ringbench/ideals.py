"""Ideal lattice enumeration, annihilators, primes, and zero-divisor data.

Ideals are bitsets over element indices (Python ints), so containment,
equality, and deduplication are single integer operations.  The complete
lattice is obtained by closing the set of distinct principal ideals under
pairwise ideal sums: every ideal of a finite ring is the sum of the principal
ideals of its members, and the closure terminates because the lattice is
finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ResourceLimitError
from .rings import FiniteRing

DEFAULT_MAX_IDEALS = 20000


def _mask_from_indices(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def _indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Ideal:
    """An ideal of a finite ring, in bitset form."""

    ring: FiniteRing
    mask: int

    @cached_property
    def members(self) -> tuple[int, ...]:
        return _indices_from_mask(self.mask)

    @cached_property
    def member_array(self) -> np.ndarray:
        return np.array(self.members, dtype=np.int64)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> int(i) & 1)

    def issubset(self, other: "Ideal") -> bool:
        return self.mask & ~other.mask == 0

    @cached_property
    def generators(self) -> tuple[int, ...]:
        return minimal_generators(self)

    @cached_property
    def label(self) -> str:
        if self.mask == 1 << self.ring.zero:
            return "(0)"
        return "(" + ", ".join(self.ring.labels[g] for g in self.generators) + ")"

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and self.ring is other.ring and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask))

    def __repr__(self) -> str:
        return f"Ideal({self.label} of {self.ring.name}, size={self.size})"


def principal_ideal(ring: FiniteRing, a: int) -> Ideal:
    """Ra = {ra : r in R}; additively closed because r1*a + r2*a = (r1+r2)*a."""
    if not 0 <= a < ring.order:
        raise ValueError(f"element index {a} out of range for {ring.name}")
    return Ideal(ring, _mask_from_indices(np.unique(ring.mul[:, a])))


def ideal_from_generators(ring: FiniteRing, gens) -> Ideal:
    """Smallest ideal containing the given elements (sum of their principal ideals)."""
    mask = 1 << ring.zero
    for g in gens:
        mask |= principal_ideal(ring, g).mask
    members = np.array(_indices_from_mask(mask), dtype=np.int64)
    while True:
        sums = np.unique(ring.add[np.ix_(members, members)])
        new = _mask_from_indices(sums)
        if new == mask:
            return Ideal(ring, mask)
        mask = new
        members = np.array(_indices_from_mask(mask), dtype=np.int64)


def minimal_generators(ideal: Ideal) -> tuple[int, ...]:
    """Greedy minimal generating list, deterministic by element index order."""
    ring = ideal.ring
    if ideal.mask == 1 << ring.zero:
        return (ring.zero,)
    for a in ideal.members:
        if a != ring.zero and principal_ideal(ring, a).mask == ideal.mask:
            return (a,)
    gens: list[int] = []
    mask = 1 << ring.zero
    while mask != ideal.mask:
        for a in ideal.members:
            if not mask >> a & 1:
                gens.append(a)
                mask = ideal_from_generators(ring, gens).mask
                break
    return tuple(gens)


def ideal_sum(i: Ideal, j: Ideal) -> Ideal:
    """I + J = {i + j}; already an ideal when I and J are."""
    if i.ring is not j.ring:
        raise ValueError("ideal_sum requires ideals of the same ring")
    if i.issubset(j):
        return j
    if j.issubset(i):
        return i
    sums = np.unique(i.ring.add[np.ix_(i.member_array, j.member_array)])
    return Ideal(i.ring, _mask_from_indices(sums))


def ideal_product(i: Ideal, j: Ideal) -> Ideal:
    """IJ = additive closure of the pairwise element products."""
    if i.ring is not j.ring:
        raise ValueError("ideal_product requires ideals of the same ring")
    ring = i.ring
    prods = np.unique(ring.mul[np.ix_(i.member_array, j.member_array)])
    mask = _mask_from_indices(prods)
    members = np.array(_indices_from_mask(mask), dtype=np.int64)
    while True:
        sums = np.unique(ring.add[np.ix_(members, members)])
        new = _mask_from_indices(sums)
        if new == mask:
            return Ideal(ring, mask)
        mask = new
        members = np.array(_indices_from_mask(mask), dtype=np.int64)


def annihilator(ring: FiniteRing, ideal: Ideal) -> Ideal:
    """Ann(I) = {r : rI = (0)}; Ann((0)) = R."""
    cols = ring.mul[:, ideal.member_array]
    hits = np.flatnonzero((cols == ring.zero).all(axis=1))
    return Ideal(ring, _mask_from_indices(hits))


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """All ideals of a finite ring with annihilator/prime/containment metadata.

    Ideals are sorted by (size, mask), so index 0 is (0) and the last index is
    R itself; this ordering is the deterministic vertex order of AG(R).
    """

    ring: FiniteRing
    ideals: tuple[Ideal, ...]
    annihilator_index: tuple[int, ...]
    is_prime: tuple[bool, ...]
    is_minimal_prime: tuple[bool, ...]
    is_annihilating: tuple[bool, ...]
    subideal_masks: tuple[int, ...]  # bitmask over lattice indices contained in each ideal

    @cached_property
    def index_of(self) -> dict[int, int]:
        return {ideal.mask: k for k, ideal in enumerate(self.ideals)}

    @property
    def zero_index(self) -> int:
        return 0

    @property
    def unit_index(self) -> int:
        return len(self.ideals) - 1

    def annihilating_indices(self) -> tuple[int, ...]:
        return tuple(k for k, flag in enumerate(self.is_annihilating) if flag)

    def prime_indices(self) -> tuple[int, ...]:
        return tuple(k for k, flag in enumerate(self.is_prime) if flag)

    def minimal_prime_indices(self) -> tuple[int, ...]:
        return tuple(k for k, flag in enumerate(self.is_minimal_prime) if flag)

    @cached_property
    def maximal_ideal_indices(self) -> tuple[int, ...]:
        """Proper ideals not contained in any other proper ideal."""
        unit = self.unit_index
        out = []
        for k in range(len(self.ideals)):
            if k == unit:
                continue
            contained = [j for j in range(len(self.ideals))
                         if j not in (k, unit) and self.subideal_masks[j] >> k & 1]
            if not contained:
                out.append(k)
        return tuple(out)

    def n_subideals(self, k: int) -> int:
        return self.subideal_masks[k].bit_count()

    def label(self, k: int) -> str:
        return self.ideals[k].label

    def __repr__(self) -> str:
        return f"IdealLattice({self.ring.name}, {len(self.ideals)} ideals)"


def enumerate_ideals(ring: FiniteRing, max_ideals: int = DEFAULT_MAX_IDEALS) -> IdealLattice:
    """Enumerate every ideal of the ring and compute lattice metadata."""
    n = ring.order
    seen: set[int] = set()
    principal: list[int] = []
    for a in range(n):
        mask = _mask_from_indices(np.unique(ring.mul[:, a]))
        if mask not in seen:
            seen.add(mask)
            principal.append(mask)

    masks = set(principal)
    frontier = list(principal)
    while frontier:
        fresh: list[int] = []
        for m1 in frontier:
            i1 = Ideal(ring, m1)
            for m2 in list(masks):
                if m1 & ~m2 == 0 or m2 & ~m1 == 0:
                    continue
                s = ideal_sum(i1, Ideal(ring, m2)).mask
                if s not in masks:
                    masks.add(s)
                    fresh.append(s)
                    if len(masks) > max_ideals:
                        raise ResourceLimitError(
                            f"{ring.name}: ideal count exceeds the cap of {max_ideals}")
        frontier = fresh

    ordered = sorted(masks, key=lambda m: (m.bit_count(), m))
    ideals = tuple(Ideal(ring, m) for m in ordered)
    index_of = {m: k for k, m in enumerate(ordered)}
    zero_mask = 1 << ring.zero

    ann_index = []
    for ideal in ideals:
        ann = annihilator(ring, ideal)
        k = index_of.get(ann.mask)
        if k is None:
            raise AssertionError(f"{ring.name}: annihilator of {ideal.label} missing from lattice")
        ann_index.append(k)

    # prime: proper, and no product of two outside elements lands inside
    member_masks = np.zeros((len(ideals), n), dtype=bool)
    for k, ideal in enumerate(ideals):
        member_masks[k, ideal.member_array] = True
    is_prime = []
    for k, ideal in enumerate(ideals):
        if ideal.mask == ordered[-1]:
            is_prime.append(False)
            continue
        outside = np.flatnonzero(~member_masks[k])
        prods = ring.mul[np.ix_(outside, outside)]
        is_prime.append(not member_masks[k][prods].any())

    subideal = []
    for k, ideal in enumerate(ideals):
        bits = 0
        for j, other in enumerate(ideals):
            if other.mask & ~ideal.mask == 0:
                bits |= 1 << j
        subideal.append(bits)

    prime_ks = [k for k, p in enumerate(is_prime) if p]
    is_min_prime = [False] * len(ideals)
    for k in prime_ks:
        others_below = [j for j in prime_ks if j != k and subideal[k] >> j & 1]
        if not others_below:
            is_min_prime[k] = True

    is_annihilating = [ideal.mask != zero_mask and ideals[ann_index[k]].mask != zero_mask
                       for k, ideal in enumerate(ideals)]

    return IdealLattice(ring, ideals, tuple(ann_index), tuple(is_prime),
                        tuple(is_min_prime), tuple(is_annihilating), tuple(subideal))


# --------------------------------------------------------------------------
# zero divisors, nilradical, reducedness


@dataclass(frozen=True)
class ZeroDivisorSet:
    """Z(R), including 0 by convention; Z(R)* = Z(R) minus 0."""

    ring: FiniteRing
    mask: int
    is_ideal: bool
    prime_cover: tuple[int, int] | None = None  # lattice indices, when computed

    @property
    def members(self) -> tuple[int, ...]:
        return _indices_from_mask(self.mask)

    @property
    def nonzero_members(self) -> tuple[int, ...]:
        return _indices_from_mask(self.mask & ~(1 << self.ring.zero))


def zero_divisor_mask(ring: FiniteRing) -> int:
    nonzero = np.arange(ring.order) != ring.zero
    hits = ((ring.mul == ring.zero) & nonzero[None, :]).any(axis=1)
    hits[ring.zero] = True
    return _mask_from_indices(np.flatnonzero(hits))


def _mask_is_ideal(ring: FiniteRing, mask: int) -> bool:
    members = np.array(_indices_from_mask(mask), dtype=np.int64)
    sums = np.unique(ring.add[np.ix_(members, members)])
    if _mask_from_indices(sums) & ~mask:
        return False
    prods = np.unique(ring.mul[:, members])
    return not _mask_from_indices(prods) & ~mask


def zero_divisor_set(ring: FiniteRing, lattice: IdealLattice | None = None) -> ZeroDivisorSet:
    """Exhaustive zero-divisor scan; cover data filled in when a lattice is given."""
    mask = zero_divisor_mask(ring)
    cover = None
    if lattice is not None:
        cover = zr_condition_profile(ring, lattice).cover_indices
    return ZeroDivisorSet(ring, mask, _mask_is_ideal(ring, mask), cover)


def nilradical(ring: FiniteRing) -> Ideal:
    """The set of nilpotent elements, by iterated powers."""
    nil = []
    for a in range(ring.order):
        x, steps = a, 0
        while x != ring.zero and steps <= ring.order:
            x = int(ring.mul[x, a])
            steps += 1
        if x == ring.zero:
            nil.append(a)
    return Ideal(ring, _mask_from_indices(nil))


def is_reduced(ring: FiniteRing) -> bool:
    return nilradical(ring).mask == 1 << ring.zero


@dataclass(frozen=True)
class ZrProfile:
    """The Z(R) conditions used by the diameter and girth theorems."""

    z_mask: int
    zsq_zero: bool
    z_is_ideal: bool
    z_is_prime_ideal: bool
    maximal_prime_indices: tuple[int, ...]
    cover_indices: tuple[int, int] | None       # exactly-two maximal primes covering Z(R)
    cover_intersection_is_zero: bool
    union_two_primes_intersect_zero: bool
    subideal_counts: tuple[int, int] | None     # |I(P1)|, |I(P2)| when the cover exists


def zr_condition_profile(ring: FiniteRing, lattice: IdealLattice) -> ZrProfile:
    """Classify Z(R): squared-to-zero, prime, or a two-prime cover.

    The candidate cover is the set of maximal primes of the lattice contained
    in Z(R); when they are not exactly two covering primes, no cover is
    reported.
    """
    z_mask = zero_divisor_mask(ring)
    zero_mask = 1 << ring.zero

    members = np.array(_indices_from_mask(z_mask), dtype=np.int64)
    prods = ring.mul[np.ix_(members, members)]
    zsq_zero = bool((prods == ring.zero).all())

    z_idx = lattice.index_of.get(z_mask)
    z_is_ideal = z_idx is not None
    z_is_prime = bool(z_is_ideal and lattice.is_prime[z_idx])

    primes_in_z = [k for k in lattice.prime_indices()
                   if lattice.ideals[k].mask & ~z_mask == 0]
    maximal = [k for k in primes_in_z
               if not any(j != k and lattice.ideals[k].mask & ~lattice.ideals[j].mask == 0
                          for j in primes_in_z)]
    maximal = tuple(sorted(maximal))

    cover = None
    inter_zero = False
    counts = None
    if len(maximal) == 2:
        p1, p2 = maximal
        if lattice.ideals[p1].mask | lattice.ideals[p2].mask == z_mask:
            cover = (p1, p2)
            inter_zero = lattice.ideals[p1].mask & lattice.ideals[p2].mask == zero_mask
            counts = (lattice.n_subideals(p1), lattice.n_subideals(p2))

    return ZrProfile(
        z_mask=z_mask,
        zsq_zero=zsq_zero,
        z_is_ideal=z_is_ideal,
        z_is_prime_ideal=z_is_prime,
        maximal_prime_indices=maximal,
        cover_indices=cover,
        cover_intersection_is_zero=inter_zero,
        union_two_primes_intersect_zero=bool(cover is not None and inter_zero),
        subideal_counts=counts,
    )
