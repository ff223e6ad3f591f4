"""Finite complete lattices carrying an associative product.

The product is not assumed commutative.  Elements are integer indices into
``names``; index order is the canonical order used for deterministic
witnesses and outputs.  ``FiniteIdealLattice`` performs only shape checks on
construction so that broken inputs can still be loaded and examined:
``verify_axioms`` reports on the actual axioms, and ``build_lattice`` (in
``sources``) refuses to return an invalid lattice.

Compactness-flavoured axioms hold automatically at this scale: every element
of a finite lattice is compact, because a join over a finite set is already
achieved by a finite subset.  The verification report states this instead of
brute-forcing it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LatticeError
from .report import Check, Report


def _as_bool_matrix(rows, n, what):
    matrix = tuple(tuple(bool(v) for v in row) for row in rows)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError(f"{what} must be a {n}x{n} matrix")
    return matrix


def _least(candidates, uppers):
    """The member of ``candidates`` below all others, or None."""
    for x in sorted(candidates):
        if candidates <= uppers[x]:
            return x
    return None


def _greatest(candidates, lowers):
    for x in sorted(candidates):
        if candidates <= lowers[x]:
            return x
    return None


def _names(names, witness):
    return tuple(names[i] for i in witness) if witness is not None else None


class FinitePoset:
    """A finite partial order; construction fails unless leq is an order."""

    def __init__(self, names, leq):
        self.names = tuple(str(x) for x in names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("element names must be unique")
        n = len(self.names)
        self._leq = _as_bool_matrix(leq, n, "leq")
        self._index = {name: i for i, name in enumerate(self.names)}
        for kind, probe in (("reflexive", _reflexivity_witness),
                            ("antisymmetric", _antisymmetry_witness),
                            ("transitive", _transitivity_witness)):
            w = probe(self._leq)
            if w is not None:
                raise LatticeError(f"leq is not {kind}", _names(self.names, w))
        self._uppers = tuple(frozenset(j for j in range(n) if self._leq[i][j])
                             for i in range(n))
        self._lowers = tuple(frozenset(i for i in range(n) if self._leq[i][j])
                             for j in range(n))

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def name(self, i):
        return self.names[i]

    def leq(self, a, b):
        return self._leq[a][b]

    def lub(self, a, b):
        return _least(self._uppers[a] & self._uppers[b], self._uppers)

    def glb(self, a, b):
        return _greatest(self._lowers[a] & self._lowers[b], self._lowers)

    def _key(self):
        return (self.names, self._leq)

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FinitePoset({list(self.names)!r})"


def _reflexivity_witness(leq):
    n = len(leq)
    return next(((i,) for i in range(n) if not leq[i][i]), None)


def _antisymmetry_witness(leq):
    n = len(leq)
    return next(((i, j) for i in range(n) for j in range(i + 1, n)
                 if leq[i][j] and leq[j][i]), None)


def _transitivity_witness(leq):
    n = len(leq)
    for i in range(n):
        for j in range(n):
            if leq[i][j]:
                for k in range(n):
                    if leq[j][k] and not leq[i][k]:
                        return (i, j, k)
    return None


class FiniteIdealLattice:
    """Finite lattice with a product table, unit = top, annihilating bottom.

    Only shapes are validated here; mathematical content is the business of
    ``verify_axioms``.  Instances are immutable after construction and safe
    to share between threads; derived data (join tables, primes, radicals)
    is cached on first use.
    """

    def __init__(self, names, leq, mul, top, bottom):
        self.names = tuple(str(x) for x in names)
        if not self.names:
            raise ValueError("a lattice needs at least one element")
        if len(set(self.names)) != len(self.names):
            raise ValueError("element names must be unique")
        n = len(self.names)
        self._leq = _as_bool_matrix(leq, n, "leq")
        table = tuple(tuple(int(v) for v in row) for row in mul)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"mul must be a {n}x{n} table")
        if any(v < 0 or v >= n for row in table for v in row):
            raise ValueError("mul entries must be element indices")
        self._mul = table
        self.top = int(top)
        self.bottom = int(bottom)
        if not (0 <= self.top < n and 0 <= self.bottom < n):
            raise ValueError("top and bottom must be element indices")
        self._index = {name: i for i, name in enumerate(self.names)}
        self._uppers = tuple(frozenset(j for j in range(n) if self._leq[i][j])
                             for i in range(n))
        self._lowers = tuple(frozenset(i for i in range(n) if self._leq[i][j])
                             for j in range(n))
        self._lub_cache = {}
        self._glb_cache = {}
        self._derived = {}

    @property
    def n(self):
        return len(self.names)

    def index(self, name):
        return self._index[name]

    def name(self, i):
        return self.names[i]

    def leq(self, a, b):
        return self._leq[a][b]

    def mul(self, a, b):
        return self._mul[a][b]

    def uppers(self, a):
        return self._uppers[a]

    def lowers(self, a):
        return self._lowers[a]

    def lub(self, a, b):
        key = (a, b) if a <= b else (b, a)
        try:
            return self._lub_cache[key]
        except KeyError:
            value = _least(self._uppers[a] & self._uppers[b], self._uppers)
            self._lub_cache[key] = value
            return value

    def glb(self, a, b):
        key = (a, b) if a <= b else (b, a)
        try:
            return self._glb_cache[key]
        except KeyError:
            value = _greatest(self._lowers[a] & self._lowers[b], self._lowers)
            self._glb_cache[key] = value
            return value

    def join(self, elements):
        """Least upper bound of any iterable; the empty join is bottom."""
        result = self.bottom
        for e in elements:
            step = self.lub(result, e)
            if step is None:
                raise LatticeError("missing join",
                                   (self.names[result], self.names[e]))
            result = step
        return result

    def meet(self, elements):
        """Greatest lower bound of any iterable; the empty meet is top."""
        result = self.top
        for e in elements:
            step = self.glb(result, e)
            if step is None:
                raise LatticeError("missing meet",
                                   (self.names[result], self.names[e]))
            result = step
        return result

    def covers(self):
        """Pairs (a, b) with b covering a: a < b and nothing in between."""
        out = []
        for a in range(self.n):
            for b in range(self.n):
                if a != b and self._leq[a][b]:
                    if not any(c != a and c != b and self._leq[a][c] and self._leq[c][b]
                               for c in range(self.n)):
                        out.append((a, b))
        return out

    def _key(self):
        return (self.names, self._leq, self._mul, self.top, self.bottom)

    def __eq__(self, other):
        return (isinstance(other, FiniteIdealLattice)
                and self._key() == other._key())

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return (f"FiniteIdealLattice({self.n} elements, "
                f"top={self.names[self.top]!r}, bottom={self.names[self.bottom]!r})")


def verify_axioms(lat):
    """Check the lattice axioms, one report entry per axiom.

    Witnesses are the lexicographically smallest offending tuples in element
    index order, so repeated runs produce identical diagnostics.
    """
    cached = lat._derived.get("axiom_report")
    if cached is not None:
        return cached

    n = lat.n
    names = lat.names
    checks = []

    refl = _reflexivity_witness(lat._leq)
    checks.append(Check("order_reflexive", refl is None, _names(names, refl)))
    antisym = _antisymmetry_witness(lat._leq)
    checks.append(Check("order_antisymmetric", antisym is None, _names(names, antisym)))
    trans = _transitivity_witness(lat._leq)
    checks.append(Check("order_transitive", trans is None, _names(names, trans)))
    order_ok = refl is None and antisym is None and trans is None

    l1_witness = None
    l1_note = ""
    bad_bound = next(((a,) for a in range(n)
                      if not lat._leq[lat.bottom][a] or not lat._leq[a][lat.top]), None)
    if bad_bound is not None:
        l1_witness = bad_bound
        l1_note = "declared top/bottom are not greatest/least"
    elif order_ok:
        for a in range(n):
            if l1_witness is not None:
                break
            for b in range(a + 1, n):
                if lat.lub(a, b) is None:
                    l1_witness = (a, b)
                    l1_note = "pair without a least upper bound"
                    break
                if lat.glb(a, b) is None:
                    l1_witness = (a, b)
                    l1_note = "pair without a greatest lower bound"
                    break
    else:
        l1_witness = refl or antisym or trans
        l1_note = "not evaluated in full: leq is not a partial order"
    if l1_witness is None:
        l1_note = ("all pairwise joins and meets exist; together with top and "
                   "bottom this yields every join and meet of a finite lattice")
    l1_ok = l1_witness is None
    checks.append(Check("L1_complete", l1_ok, _names(names, l1_witness), l1_note))

    checks.append(Check("L2_compactly_generated", l1_ok, None,
                        "automatic given L1: every element of a finite lattice is compact"))

    assoc = None
    for a in range(n):
        if assoc is not None:
            break
        for b in range(n):
            if assoc is not None:
                break
            for c in range(n):
                if lat._mul[lat._mul[a][b]][c] != lat._mul[a][lat._mul[b][c]]:
                    assoc = (a, b, c)
                    break
    checks.append(Check("mul_associative", assoc is None, _names(names, assoc)))

    if l1_ok:
        dist = None
        for a in range(n):
            if dist is not None:
                break
            for b in range(n):
                if dist is not None:
                    break
                for c in range(n):
                    j = lat.lub(b, c)
                    if (lat._mul[a][j] != lat.lub(lat._mul[a][b], lat._mul[a][c])
                            or lat._mul[j][a] != lat.lub(lat._mul[b][a], lat._mul[c][a])):
                        dist = (a, b, c)
                        break
        checks.append(Check("L3_distributive", dist is None, _names(names, dist),
                            "" if dist is None else
                            "a(b v c) = ab v ac or (b v c)a = ba v ca fails"))
    else:
        checks.append(Check("L3_distributive", False, None,
                            "not evaluated: L1 failed"))

    z = lat.bottom
    annihilated = next(((a,) for a in range(n)
                        if lat._mul[z][a] != z or lat._mul[a][z] != z), None)
    checks.append(Check("L3_nullary_annihilation", annihilated is None,
                        _names(names, annihilated),
                        "bottom must annihilate: the empty-join instance of L3"))

    t = lat.top
    unit = next(((a,) for a in range(n)
                 if lat._mul[t][a] != a or lat._mul[a][t] != a), None)
    checks.append(Check("L4_unit", unit is None, _names(names, unit),
                        "top is compact automatically (finite)" if unit is None else ""))

    checks.append(Check("L5_compact_products", l1_ok, None,
                        "automatic given L1: products of compact elements are compact"))

    report = Report(tuple(checks))
    lat._derived["axiom_report"] = report
    return report


def is_compact(lat, a):
    """Every element of a finite lattice is compact.

    Whenever a is below the join of a set, the join is already reached by a
    finite subset, so the defining condition holds trivially.  Kept explicit
    so compactness-qualified statements read literally.
    """
    return 0 <= a < lat.n


def prime_violation(lat, p):
    """First pair (a, b) with ab <= p but neither a <= p nor b <= p."""
    for a in range(lat.n):
        if lat.leq(a, p):
            continue
        for b in range(lat.n):
            if not lat.leq(b, p) and lat.leq(lat.mul(a, b), p):
                return (a, b)
    return None


def is_prime(lat, p):
    return p != lat.top and prime_violation(lat, p) is None


def prime_elements(lat):
    """All prime elements, in element order."""
    cached = lat._derived.get("primes")
    if cached is None:
        cached = tuple(p for p in range(lat.n) if is_prime(lat, p))
        lat._derived["primes"] = cached
    return cached


def primes_above(lat, a):
    """V(a): the primes above a, closed in the spectrum topology."""
    return tuple(p for p in prime_elements(lat) if lat.leq(a, p))


def primes_not_above(lat, a):
    """D(a): the primes not above a, open in the spectrum topology."""
    return tuple(p for p in prime_elements(lat) if not lat.leq(a, p))


def radical(lat, a):
    """Smallest semiprime above a: the meet of all primes above a."""
    table = lat._derived.get("radical")
    if table is None:
        spec = prime_elements(lat)
        table = tuple(lat.meet([p for p in spec if lat.leq(b, p)])
                      for b in range(lat.n))
        lat._derived["radical"] = table
    return table[a]


def is_semiprime(lat, a):
    return radical(lat, a) == a


def semiprime_elements(lat):
    return tuple(a for a in range(lat.n) if is_semiprime(lat, a))


def prime_avoidance(lat, a, avoid):
    """A prime above ``a`` that avoids the multiplicative set ``avoid``.

    Returns None when some member of the set already sits below ``a``.
    Among the maximal avoiding elements above ``a`` (all of which are prime)
    the one with the smallest index is returned, so the choice is
    deterministic.
    """
    members = tuple(dict.fromkeys(avoid))
    if not members:
        raise LatticeError("the multiplicative set is empty")
    member_set = frozenset(members)
    for s in members:
        for t in members:
            if lat.mul(s, t) not in member_set:
                raise LatticeError("set is not multiplicative",
                                   (lat.names[s], lat.names[t]))
    if any(lat.leq(s, a) for s in members):
        return None
    candidates = [x for x in range(lat.n)
                  if lat.leq(a, x) and not any(lat.leq(s, x) for s in members)]
    maximal = [x for x in candidates
               if not any(y != x and lat.leq(x, y) for y in candidates)]
    best = min(maximal)
    if not is_prime(lat, best):
        raise LatticeError("maximal avoiding element is not prime",
                           (lat.names[best],))
    return best


@dataclass(frozen=True)
class PosetIdeal:
    """Non-empty, downward-closed, join-closed subset of a finite poset."""

    poset: FinitePoset
    members: frozenset

    def __post_init__(self):
        k = self.poset
        if not self.members:
            raise LatticeError("an ideal is non-empty")
        for b in sorted(self.members):
            for a in range(k.n):
                if k.leq(a, b) and a not in self.members:
                    raise LatticeError("not downward closed",
                                       (k.names[a], k.names[b]))
        for a in sorted(self.members):
            for b in sorted(self.members):
                j = k.lub(a, b)
                if j is None:
                    raise LatticeError("join missing in the ambient poset",
                                       (k.names[a], k.names[b]))
                if j not in self.members:
                    raise LatticeError("not join closed",
                                       (k.names[a], k.names[b]))


@dataclass(frozen=True)
class IdealCompletion:
    """All ideals of a finite poset, ordered by inclusion.

    For a finite poset with finite joins every ideal is principal, so the
    completion is isomorphic to the poset itself via ``embedding``.
    """

    source: FinitePoset
    poset: FinitePoset
    ideals: tuple
    embedding: tuple
    compact: tuple


def ideal_completion(source):
    """Complete a finite poset that has all finite joins, including the empty one."""
    n = source.n
    least = next((i for i in range(n) if all(source.leq(i, j) for j in range(n))), None)
    if least is None:
        raise LatticeError("poset has no least element (empty join missing)")
    for a in range(n):
        for b in range(a + 1, n):
            if source.lub(a, b) is None:
                raise LatticeError("pair without a join",
                                   (source.names[a], source.names[b]))
    ideals = tuple(PosetIdeal(source, source._lowers[a]) for a in range(n))
    sets = [ideal.members for ideal in ideals]
    leq = [[sets[i] <= sets[j] for j in range(n)] for i in range(n)]
    completion = FinitePoset(source.names, leq)
    return IdealCompletion(source, completion, tuple(sets),
                           tuple(range(n)), tuple(range(n)))
