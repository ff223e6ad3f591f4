"""Finite topological spaces, lattice spectra, and Hochster duality.

A ``FiniteSpace`` stores its complete open family explicitly.  On finite
spaces quasi-compactness is free, so the dual topology is simply the family
of closed sets, and dualising twice gives back the original space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LatticeError, SpaceError
from .lattice import (FiniteIdealLattice, prime_elements, primes_above,
                      primes_not_above, semiprime_elements, verify_axioms)
from .report import Check, Report


def set_name(names, subset):
    return "{" + ",".join(names[i] for i in sorted(subset)) + "}"


def _family_violation(family):
    members = sorted(family, key=lambda u: (len(u), sorted(u)))
    for u in members:
        for v in members:
            if u | v not in family:
                return "union", (u, v)
            if u & v not in family:
                return "intersection", (u, v)
    return None


class FiniteSpace:
    """Explicit finite topology; family laws are enforced at construction."""

    def __init__(self, names, opens):
        self.names = tuple(str(x) for x in names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("point names must be unique")
        n = len(self.names)
        family = frozenset(frozenset(u) for u in opens)
        for u in family:
            for x in u:
                if not isinstance(x, int) or not 0 <= x < n:
                    raise ValueError("opens must consist of point indices")
        full = frozenset(range(n))
        if frozenset() not in family:
            raise SpaceError("the empty set must be open")
        if full not in family:
            raise SpaceError("the full point set must be open")
        violation = _family_violation(family)
        if violation is not None:
            kind, (u, v) = violation
            raise SpaceError(f"opens are not closed under {kind}",
                             (set_name(self.names, u), set_name(self.names, v)))
        self.opens = family
        self._index = {name: i for i, name in enumerate(self.names)}
        self._full = full
        self._closure = tuple(self._smallest_closed(x) for x in range(n))

    def _smallest_closed(self, x):
        avoid = frozenset().union(*(u for u in self.opens if x not in u)) \
            if any(x not in u for u in self.opens) else frozenset()
        return self._full - avoid

    @property
    def n(self):
        return len(self.names)

    @property
    def full(self):
        return self._full

    def index(self, name):
        return self._index[name]

    def name(self, i):
        return self.names[i]

    def closure(self, x):
        return self._closure[x]

    def sorted_opens(self):
        return sorted(self.opens, key=lambda u: (len(u), sorted(u)))

    def closed_sets(self):
        return frozenset(self._full - u for u in self.opens)

    def sorted_closed_sets(self):
        return sorted(self.closed_sets(), key=lambda c: (len(c), sorted(c)))

    def is_open(self, subset):
        return frozenset(subset) in self.opens

    def is_closed(self, subset):
        return frozenset(subset) in self.closed_sets()

    def _key(self):
        return (self.names, self.opens)

    def __eq__(self, other):
        return isinstance(other, FiniteSpace) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FiniteSpace({list(self.names)!r}, {len(self.opens)} opens)"


class ContinuousMap:
    """Point map whose open preimages are open; equality is pointwise."""

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = tuple(int(v) for v in mapping)
        if len(self.mapping) != source.n:
            raise ValueError("mapping must assign a value to every source point")
        if any(not 0 <= v < target.n for v in self.mapping):
            raise ValueError("mapping values must be target point indices")
        for u in target.sorted_opens():
            if self.preimage(u) not in source.opens:
                raise SpaceError("preimage of an open set is not open",
                                 (set_name(target.names, u),))

    def preimage(self, subset):
        return frozenset(x for x in range(self.source.n) if self.mapping[x] in subset)

    def _key(self):
        return (self.source, self.target, self.mapping)

    def __eq__(self, other):
        return isinstance(other, ContinuousMap) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        points = ", ".join(f"{self.source.names[x]}->{self.target.names[v]}"
                           for x, v in enumerate(self.mapping))
        return f"ContinuousMap({points})"


def verify_spectral(space):
    """T0 plus sobriety; the compactness conditions are free on finite spaces."""
    checks = []
    t0 = None
    for x in range(space.n):
        if t0 is not None:
            break
        for y in range(x + 1, space.n):
            if all((x in u) == (y in u) for u in space.opens):
                t0 = (space.names[x], space.names[y])
                break
    checks.append(Check("t0", t0 is None, t0))
    checks.append(Check("quasi_compact", True, None,
                        "automatic: the space is finite"))
    checks.append(Check("quasi_compact_open_basis", True, None,
                        "automatic: every open of a finite space is quasi-compact "
                        "and the family is intersection closed by construction"))
    sober = None
    note = ""
    for c in space.sorted_closed_sets():
        if not c or irreducibility_witness(space, c) is not None:
            continue
        generics = [x for x in sorted(c) if space.closure(x) == c]
        if len(generics) != 1:
            sober = (set_name(space.names, c),)
            note = (f"irreducible closed set with {len(generics)} generic points")
            break
    checks.append(Check("sober", sober is None, sober, note))
    return Report(tuple(checks))


def is_spectral(space):
    return verify_spectral(space).ok


def _require_spectral(space):
    report = verify_spectral(space)
    if not report.ok:
        bad = report.failures()[0]
        raise SpaceError(f"space is not spectral: {bad.name}", bad.witness)


def irreducibility_witness(space, closed_set):
    """Two proper closed subsets covering the set, or None if irreducible.

    The empty set counts as reducible.
    """
    closeds = space.sorted_closed_sets()
    for a in closeds:
        if a < closed_set:
            for b in closeds:
                if b < closed_set and a | b == closed_set:
                    return (a, b)
    return None


def is_irreducible(space, closed_set):
    closed_set = frozenset(closed_set)
    return bool(closed_set) and irreducibility_witness(space, closed_set) is None


def generic_point(space, closed_set):
    """The unique point whose closure is the given irreducible closed set.

    Returns None when no point, or more than one point, generates the set
    (the latter only happens on non-T0 spaces).
    """
    closed_set = frozenset(closed_set)
    if not space.is_closed(closed_set):
        raise SpaceError("set is not closed", (set_name(space.names, closed_set),))
    if not closed_set:
        raise SpaceError("the empty set is not irreducible")
    witness = irreducibility_witness(space, closed_set)
    if witness is not None:
        a, b = witness
        raise SpaceError("set is not irreducible",
                         (set_name(space.names, a), set_name(space.names, b)))
    generics = [x for x in sorted(closed_set) if space.closure(x) == closed_set]
    return generics[0] if len(generics) == 1 else None


def spectrum_positions(lat):
    """Primes in element order together with their point positions."""
    primes = prime_elements(lat)
    return primes, {p: i for i, p in enumerate(primes)}


def support_points(lat, a, position=None):
    """supp(a) = D(a) as a set of spectrum point indices."""
    if position is None:
        _, position = spectrum_positions(lat)
    return frozenset(position[p] for p in primes_not_above(lat, a))


def zariski_spectrum(lat):
    """The space of primes with opens {D(a)}; raises on an invalid lattice."""
    report = verify_axioms(lat)
    if not report.ok:
        bad = report.failures()[0]
        raise LatticeError(f"invalid lattice: {bad.name} fails", bad.witness)
    primes, position = spectrum_positions(lat)
    opens = {support_points(lat, a, position) for a in range(lat.n)}
    return FiniteSpace([lat.names[p] for p in primes], opens)


def hochster_dual(space):
    """Same points, opens exchanged with closed sets; an involution."""
    _require_spectral(space)
    return FiniteSpace(space.names, space.closed_sets())


def open_lattice(space):
    """The opens under inclusion, with product = intersection."""
    _require_spectral(space)
    opens = space.sorted_opens()
    position = {u: i for i, u in enumerate(opens)}
    names = [set_name(space.names, u) for u in opens]
    n = len(opens)
    leq = [[opens[i] <= opens[j] for j in range(n)] for i in range(n)]
    mul = [[position[opens[i] & opens[j]] for j in range(n)] for i in range(n)]
    return FiniteIdealLattice(names, leq, mul,
                              position[space.full], position[frozenset()])


def is_homeomorphism(f):
    """Bijective on points, with preimage a bijection between open families."""
    if sorted(set(f.mapping)) != list(range(f.target.n)):
        return False
    preimages = {f.preimage(u) for u in f.target.opens}
    return len(preimages) == len(f.target.opens) and preimages == f.source.opens


def canonical_homeomorphism(space):
    """x -> complement of closure(x), landing in the spectrum of the opens."""
    ol = open_lattice(space)
    spectrum = zariski_spectrum(ol)
    opens = space.sorted_opens()
    element_of = {u: i for i, u in enumerate(opens)}
    _, position = spectrum_positions(ol)
    mapping = []
    for x in range(space.n):
        element = element_of[space.full - space.closure(x)]
        if element not in position:
            raise SpaceError("complement of a point closure is not prime",
                             (space.names[x],))
        mapping.append(position[element])
    f = ContinuousMap(space, spectrum, mapping)
    if not is_homeomorphism(f):
        raise SpaceError("canonical comparison map is not a homeomorphism")
    return f


@dataclass(frozen=True)
class ClassificationTable:
    """Bijective pairing of the semiprime elements with subsets of a space."""

    lattice: FiniteIdealLattice
    space: FiniteSpace
    kind: str
    order: str
    pairs: tuple

    def __post_init__(self):
        values = [subset for _, subset in self.pairs]
        if len(set(values)) != len(values):
            raise LatticeError("classification is not injective")

    def subset_for(self, element):
        for a, subset in self.pairs:
            if a == element:
                return subset
        raise KeyError(element)

    def element_for(self, subset):
        subset = frozenset(subset)
        for a, value in self.pairs:
            if value == subset:
                return a
        raise KeyError(subset)


def _check_monotone(lat, pairs, order, label):
    for a, va in pairs:
        for b, vb in pairs:
            if lat.leq(a, b):
                good = vb <= va if order == "reversing" else va <= vb
                if not good:
                    raise LatticeError(f"{label} is not order {order}",
                                       (lat.names[a], lat.names[b]))


def closed_set_classification(lat):
    """Semiprimes <-> closed subsets of the spectrum via a -> V(a), Y -> inf Y."""
    spectrum = zariski_spectrum(lat)
    primes, position = spectrum_positions(lat)
    pairs = tuple((a, frozenset(position[p] for p in primes_above(lat, a)))
                  for a in semiprime_elements(lat))
    closeds = spectrum.closed_sets()
    if {v for _, v in pairs} != closeds:
        raise LatticeError("V does not hit every closed set exactly")
    for a, v in pairs:
        if lat.meet(primes[i] for i in sorted(v)) != a:
            raise LatticeError("inf V(a) differs from a", (lat.names[a],))
    for y in closeds:
        a = lat.meet(primes[i] for i in sorted(y))
        if frozenset(position[p] for p in primes_above(lat, a)) != y:
            raise LatticeError("V(inf Y) differs from Y",
                               (set_name(spectrum.names, y),))
    _check_monotone(lat, pairs, "reversing", "closed-set classification")
    return ClassificationTable(lat, spectrum, "closed", "reversing", pairs)


def _complement_classification(lat, space, family, kind):
    primes, position = spectrum_positions(lat)
    pairs = tuple((a, support_points(lat, a, position))
                  for a in semiprime_elements(lat))
    if {v for _, v in pairs} != family:
        raise LatticeError(f"{kind} classification misses part of the family")
    supports = {b: support_points(lat, b, position) for b in range(lat.n)}
    for a, value in pairs:
        if lat.join(b for b in range(lat.n) if supports[b] <= value) != a:
            raise LatticeError(f"{kind} classification round trip differs from a",
                               (lat.names[a],))
    for y in family:
        a = lat.join(b for b in range(lat.n) if supports[b] <= y)
        if supports[a] != y:
            raise LatticeError(f"{kind} classification round trip differs from Y",
                               (set_name(space.names, y),))
    _check_monotone(lat, pairs, "preserving", f"{kind} classification")
    return ClassificationTable(lat, space, kind, "preserving", pairs)


def open_set_classification(lat):
    """Semiprimes <-> open subsets of the spectrum via a -> D(a)."""
    spectrum = zariski_spectrum(lat)
    return _complement_classification(lat, spectrum, spectrum.opens, "open")


def support_classification(lat):
    """Semiprimes <-> closed subsets of the dual spectrum via a -> supp(a)."""
    dual = hochster_dual(zariski_spectrum(lat))
    return _complement_classification(lat, dual, dual.closed_sets(), "support")
