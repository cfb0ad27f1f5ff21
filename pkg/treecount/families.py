# Copyright (C) 2026 treecount developers.
# Use of this source code is governed by MIT license that can be
# found in the LICENSE file.

"""Graph families with closed-form spanning tree counts.

Seven families are covered.  Vertex order is always p_1 .. p_n, then
q_1 .. q_m, then the apex p when there is one.

    Complete(n)                  K_n (Cayley).
                                 t = n^(n-2)

    Bipartite(m, n)              K_{m,n} on p_1..p_n and q_1..q_m.
                                 t = n^(m-1) m^(n-1)

    Cone(m, n)                   C^mK_n: K_n on p_1..p_n plus an apex
                                 joined to every p_i by m edges.
                                 t = m (m + n)^(n-1)

    ModifiedBipartite(k, m, n)   M^kK_{m,n}: K_{m,n} whose q_m-p_i edges
                                 are replaced by k parallel edges.
                                 t = k n^(m-1) (m + k - 1)^(n-1)

    GeneralizedBipartite(ks, n)  M^{k_1..k_m}K_{m,n}: every q_i-p_j pair
                                 carries k_i parallel edges.
                                 t = n^(m-1) P T^(n-1)
                                 with P = prod k_i, T = sum k_i

    HalfCone(k, ks, n)           F^kM^{k_1..k_m}K_{m,n}: the above plus an
                                 apex joined to every q_i by k edges.
                                 t = T^(n-1) k (prod (k + k_i n))
                                     * sum k_i / (k + k_i n)

    Multipartite(parts)          K_{n_1..n_k}, n = sum n_i.
                                 t = n^(k-2) prod (n - n_i)^(n_i - 1)

The half cone count is evaluated without the division, as
T^(n-1) k sum_i k_i prod_{j != i} (k + k_j n).

Next to the closed forms are the recurrences which one application of
the vertex deletion formula produces for each family (at the apex for
cones, at q_m for M^kK_{m,n}, at p_n for M^{ks}K_{m,n}), evaluated by
memoized dynamic programming, and the symmetric-sum identities the
bipartite arguments rely on.
"""

import dataclasses
import functools
import itertools
import math

from .multigraph import MultiGraph


__all__ = [
    'FAMILIES',
    'Bipartite',
    'Complete',
    'Cone',
    'FamilyError',
    'FamilySpec',
    'GeneralizedBipartite',
    'HalfCone',
    'InvalidFamilySpec',
    'InvalidIndex',
    'InvalidPartition',
    'ModifiedBipartite',
    'Multipartite',
    'binomial',
    'build',
    'cone_recurrence_dp',
    'elementary_symmetric',
    'formula_bipartite',
    'formula_complete',
    'formula_cone',
    'formula_generalized_bipartite',
    'formula_half_cone',
    'formula_half_cone_uniform',
    'formula_modified_bipartite',
    'formula_multipartite',
    'generalized_bipartite_recurrence_dp',
    'half_cone_derivative_identity',
    'half_cone_recurrence_dp',
    'lemma_complement_product_sum',
    'lemma_sum_over_subsets',
    'modified_bipartite_recurrence_dp',
    'parse_family_spec',
]


# ===================================================================
# --- exceptions
# ===================================================================


class FamilyError(ValueError):
    """Base class for family exceptions."""


class InvalidFamilySpec(FamilyError):
    """Raised on family parameters outside their domain."""


class InvalidPartition(FamilyError):
    """Raised by formula_multipartite() on fewer than two parts."""


class InvalidIndex(FamilyError):
    """Raised when a subset size is out of range."""


def _check_int(name, value, minimum=1):
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidFamilySpec(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise InvalidFamilySpec(f"{name} must be >= {minimum}, got {value!r}")


def _check_ints(name, values, minimum=1):
    if not values:
        raise InvalidFamilySpec(f"{name} must not be empty")
    for value in values:
        _check_int(name, value, minimum)


def binomial(n, r):
    """Exact binomial coefficient; 0 when r is outside [0, n]."""
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


# ===================================================================
# --- closed forms
# ===================================================================


def formula_cone(m, n):
    """t(C^mK_n) = m (m + n)^(n-1); 1 for n = 0."""
    _check_int('m', m)
    _check_int('n', n, 0)
    if n == 0:
        return 1
    return m * (m + n) ** (n - 1)


def formula_complete(n):
    """Cayley: t(K_n) = n^(n-2)."""
    _check_int('n', n)
    if n == 1:
        return 1
    return n ** (n - 2)


def formula_modified_bipartite(k, m, n):
    """t(M^kK_{m,n}) = k n^(m-1) (m + k - 1)^(n-1)."""
    _check_int('k', k)
    _check_int('m', m)
    _check_int('n', n)
    return k * n ** (m - 1) * (m + k - 1) ** (n - 1)


def formula_bipartite(m, n):
    """t(K_{m,n}) = n^(m-1) m^(n-1)."""
    _check_int('m', m)
    _check_int('n', n)
    return n ** (m - 1) * m ** (n - 1)


def formula_generalized_bipartite(ks, n):
    """t(M^{k_1..k_m}K_{m,n}) = n^(m-1) (prod k_i) (sum k_i)^(n-1)."""
    _check_ints('ks', ks)
    _check_int('n', n)
    return n ** (len(ks) - 1) * math.prod(ks) * sum(ks) ** (n - 1)


def formula_half_cone(k, ks, n):
    """t(F^kM^{k_1..k_m}K_{m,n}), as
    T^(n-1) k sum_i k_i prod_{j != i} (k + k_j n).
    """
    _check_int('k', k)
    _check_ints('ks', ks)
    _check_int('n', n)
    factors = [k + ki * n for ki in ks]
    total = 0
    for i, ki in enumerate(ks):
        total += ki * math.prod(factors[:i] + factors[i + 1 :])
    return sum(ks) ** (n - 1) * k * total


def formula_half_cone_uniform(k, s, m, n):
    """t(F^kM^{s..s}K_{m,n}) = s^n m^n k (k + s n)^(m-1)."""
    for name, value in (('k', k), ('s', s), ('m', m), ('n', n)):
        _check_int(name, value)
    return s**n * m**n * k * (k + s * n) ** (m - 1)


def formula_multipartite(parts):
    """t(K_{n_1..n_k}) = n^(k-2) prod (n - n_i)^(n_i - 1)."""
    if len(parts) < 2:
        raise InvalidPartition(
            f"need at least two parts, got {list(parts)!r}"
        )
    _check_ints('parts', parts)
    n = sum(parts)
    return n ** (len(parts) - 2) * math.prod(
        (n - ni) ** (ni - 1) for ni in parts
    )


# ===================================================================
# --- recurrences
# ===================================================================


def cone_recurrence_dp(m, n):
    """t(C^mK_n) through the deletion recurrence at the apex:

        t(C^mK_n) = sum_{j=1..n} C(n, j) m^j t(C^jK_{n-j})

    with t(C^jK_0) = 1 and t(C^jK_1) = j.
    """
    _check_int('m', m)
    _check_int('n', n, 0)

    @functools.lru_cache(maxsize=None)
    def t(j, r):
        if r == 0:
            return 1
        if r == 1:
            return j
        return sum(
            binomial(r, i) * j**i * t(i, r - i) for i in range(1, r + 1)
        )

    return t(m, n)


def modified_bipartite_recurrence_dp(k, m, n):
    """t(M^kK_{m,n}) through the deletion recurrence at q_m, which
    swaps the sides of the bipartition at every step:

        t(M^kK_{m,n}) = sum_{j=1..n} C(n, j) k^j t(M^jK_{n-j+1,m-1})

    with t(M^kK_{m,1}) = k and t(M^kK_{1,n}) = k^n.
    """
    _check_int('k', k)
    _check_int('m', m)
    _check_int('n', n)

    @functools.lru_cache(maxsize=None)
    def t(k, m, n):
        if n == 1:
            return k
        if m == 1:
            return k**n
        return sum(
            binomial(n, j) * k**j * t(j, n - j + 1, m - 1)
            for j in range(1, n + 1)
        )

    return t(k, m, n)


def _merged_subsets(ks):
    """Yield (picked, merged) for every subset of at least two entries
    of ks: the picked multiplicities and the sorted tuple left after
    replacing them by their sum, i.e. the multiplicities seen once the
    corresponding q-vertices are identified.
    """
    for size in range(2, len(ks) + 1):
        for chosen in itertools.combinations(range(len(ks)), size):
            picked = [ks[i] for i in chosen]
            rest = [ks[i] for i in range(len(ks)) if i not in chosen]
            yield picked, tuple(sorted([sum(picked), *rest]))


def _gen_bipartite_table():
    @functools.lru_cache(maxsize=None)
    def t(ks, n):
        if n == 1:
            return math.prod(ks)
        total = sum(ks) * t(ks, n - 1)
        for picked, merged in _merged_subsets(ks):
            total += math.prod(picked) * t(merged, n - 1)
        return total

    return t


def generalized_bipartite_recurrence_dp(ks, n):
    """t(M^{k_1..k_m}K_{m,n}) through the deletion recurrence at p_n.
    Deleting p_n leaves M^{ks}K_{m,n-1}; identifying a set S of
    q-vertices gives M^{(sum_S k_i, rest)}K_{m-|S|+1,n-1}, so

        t = T t(M^{ks}K_{m,n-1})
            + sum_{|S| >= 2} (prod_S k_i) t(M^{(sum_S k_i, rest)}K_{.,n-1})

    with t(M^{ks}K_{m,1}) = prod k_i.
    """
    _check_ints('ks', ks)
    _check_int('n', n)
    return _gen_bipartite_table()(tuple(sorted(ks)), n)


def half_cone_recurrence_dp(k, ks, n):
    """t(F^kM^{k_1..k_m}K_{m,n}) through the deletion recurrence at
    the apex, whose neighborhood is the whole q side:

        t = m k t(M^{ks}K_{m,n})
            + sum_{|S| >= 2} k^|S| t(M^{(sum_S k_i, rest)}K_{m-|S|+1,n})
    """
    _check_int('k', k)
    _check_ints('ks', ks)
    _check_int('n', n)
    t = _gen_bipartite_table()
    ks = tuple(sorted(ks))
    total = len(ks) * k * t(ks, n)
    for picked, merged in _merged_subsets(ks):
        total += k ** len(picked) * t(merged, n)
    return total


# ===================================================================
# --- symmetric sums
# ===================================================================


def elementary_symmetric(values, r):
    """e_r(values): the sum of all products of r of the values."""
    if not 0 <= r <= len(values):
        raise InvalidIndex(f"r={r!r} out of range [0, {len(values)}]")
    e = [1] + [0] * r
    for x in values:
        for i in range(r, 0, -1):
            e[i] += e[i - 1] * x
    return e[r]


def _check_index(values, j):
    if not 1 <= j <= len(values):
        raise InvalidIndex(f"j={j!r} out of range [1, {len(values)}]")


def lemma_sum_over_subsets(values, j):
    """Both sides of

        sum_{B subset A, |B| = j} sum_{k in B} k = C(m-1, j-1) sum A

    returned as (enumerated left side, right side).
    """
    _check_index(values, j)
    lhs = sum(sum(b) for b in itertools.combinations(values, j))
    rhs = binomial(len(values) - 1, j - 1) * sum(values)
    return lhs, rhs


def lemma_complement_product_sum(values, j):
    """Both sides of

        sum_{|B| = j} (prod_{A - B} k) (sum_B k) = (m-j+1) e_{m-j+1}(A)

    returned as (enumerated left side, right side).
    """
    _check_index(values, j)
    m = len(values)
    lhs = 0
    for chosen in itertools.combinations(range(m), j):
        rest = [values[i] for i in range(m) if i not in chosen]
        lhs += math.prod(rest) * sum(values[i] for i in chosen)
    rhs = (m - j + 1) * elementary_symmetric(values, m - j + 1)
    return lhs, rhs


def half_cone_derivative_identity(k, ks, n):
    """[x d/dy prod_i (x + k_i y)] at x = k, y = n, expanded as

        sum_{j=1..m} k^j n^(m-j) (m-j+1) e_{m-j+1}(ks)

    Multiplied by T^(n-1) it gives formula_half_cone(k, ks, n).
    """
    _check_int('k', k)
    _check_ints('ks', ks)
    _check_int('n', n)
    m = len(ks)
    return sum(
        k**j * n ** (m - j) * (m - j + 1) * elementary_symmetric(ks, m - j + 1)
        for j in range(1, m + 1)
    )


# ===================================================================
# --- family specs
# ===================================================================


class FamilySpec:
    """Base class of the family descriptions.  Subclasses are frozen
    dataclasses; parameters are validated on construction.
    """

    name = None
    list_fields = ()

    def validate(self):
        raise NotImplementedError('must be implemented in subclass')

    def __post_init__(self):
        for field in self.list_fields:
            object.__setattr__(self, field, tuple(getattr(self, field)))
        self.validate()

    @property
    def label(self):
        raise NotImplementedError('must be implemented in subclass')

    @property
    def vertex_count(self):
        raise NotImplementedError('must be implemented in subclass')

    @property
    def support_size(self):
        raise NotImplementedError('must be implemented in subclass')

    @property
    def total_multiplicity(self):
        raise NotImplementedError('must be implemented in subclass')

    def edges(self):
        raise NotImplementedError('must be implemented in subclass')

    def vertex_labels(self):
        raise NotImplementedError('must be implemented in subclass')

    def count_formula(self):
        raise NotImplementedError('must be implemented in subclass')

    def count_recurrence(self):
        raise InvalidFamilySpec(f"no recurrence known for {self.name}")

    def params(self):
        return dataclasses.asdict(self)

    def build(self):
        return MultiGraph(self.vertex_count, self.edges())

    def to_text(self):
        """The compact form read back by parse_family_spec()."""
        parts = [self.name]
        for key, value in self.params().items():
            if isinstance(value, (tuple, list)):
                value = ','.join(map(str, value))
            parts.append(f"{key}={value}")
        return ':'.join(parts)


def _bipartite_labels(m, n):
    return [f"p{j}" for j in range(1, n + 1)] + [
        f"q{i}" for i in range(1, m + 1)
    ]


@dataclasses.dataclass(frozen=True)
class Complete(FamilySpec):
    n: int

    name = 'complete'

    def validate(self):
        _check_int('n', self.n)

    @property
    def label(self):
        return f"K_{self.n}"

    @property
    def vertex_count(self):
        return self.n

    @property
    def support_size(self):
        return binomial(self.n, 2)

    @property
    def total_multiplicity(self):
        return self.support_size

    def edges(self):
        n = self.n
        return [(u, v, 1) for u in range(n) for v in range(u + 1, n)]

    def vertex_labels(self):
        return [f"p{j}" for j in range(1, self.n + 1)]

    def count_formula(self):
        return formula_complete(self.n)

    def count_recurrence(self):
        # K_n is the unit cone over K_{n-1}
        return cone_recurrence_dp(1, self.n - 1)


@dataclasses.dataclass(frozen=True)
class Bipartite(FamilySpec):
    m: int
    n: int

    name = 'bipartite'

    def validate(self):
        _check_int('m', self.m)
        _check_int('n', self.n)

    @property
    def label(self):
        return f"K_{{{self.m},{self.n}}}"

    @property
    def vertex_count(self):
        return self.m + self.n

    @property
    def support_size(self):
        return self.m * self.n

    @property
    def total_multiplicity(self):
        return self.support_size

    def edges(self):
        n = self.n
        return [(p, n + i, 1) for i in range(self.m) for p in range(n)]

    def vertex_labels(self):
        return _bipartite_labels(self.m, self.n)

    def count_formula(self):
        return formula_bipartite(self.m, self.n)

    def count_recurrence(self):
        return modified_bipartite_recurrence_dp(1, self.m, self.n)


@dataclasses.dataclass(frozen=True)
class Cone(FamilySpec):
    m: int
    n: int

    name = 'cone'

    def validate(self):
        _check_int('m', self.m)
        _check_int('n', self.n, 0)

    @property
    def label(self):
        return f"C^{self.m}K_{self.n}"

    @property
    def vertex_count(self):
        return self.n + 1

    @property
    def support_size(self):
        return binomial(self.n, 2) + self.n

    @property
    def total_multiplicity(self):
        return binomial(self.n, 2) + self.m * self.n

    def edges(self):
        n = self.n
        edges = [(u, v, 1) for u in range(n) for v in range(u + 1, n)]
        edges.extend((u, n, self.m) for u in range(n))
        return edges

    def vertex_labels(self):
        return [f"p{j}" for j in range(1, self.n + 1)] + ["p"]

    def count_formula(self):
        return formula_cone(self.m, self.n)

    def count_recurrence(self):
        return cone_recurrence_dp(self.m, self.n)


@dataclasses.dataclass(frozen=True)
class ModifiedBipartite(FamilySpec):
    k: int
    m: int
    n: int

    name = 'modified-bipartite'

    def validate(self):
        _check_int('k', self.k)
        _check_int('m', self.m)
        _check_int('n', self.n)

    @property
    def label(self):
        return f"M^{self.k}K_{{{self.m},{self.n}}}"

    @property
    def vertex_count(self):
        return self.m + self.n

    @property
    def support_size(self):
        return self.m * self.n

    @property
    def total_multiplicity(self):
        return self.n * (self.m - 1) + self.n * self.k

    def edges(self):
        n = self.n
        edges = []
        for i in range(self.m):
            mult = self.k if i == self.m - 1 else 1
            edges.extend((p, n + i, mult) for p in range(n))
        return edges

    def vertex_labels(self):
        return _bipartite_labels(self.m, self.n)

    def count_formula(self):
        return formula_modified_bipartite(self.k, self.m, self.n)

    def count_recurrence(self):
        return modified_bipartite_recurrence_dp(self.k, self.m, self.n)


@dataclasses.dataclass(frozen=True)
class GeneralizedBipartite(FamilySpec):
    ks: tuple
    n: int

    name = 'generalized-bipartite'
    list_fields = ('ks',)

    def validate(self):
        _check_ints('ks', self.ks)
        _check_int('n', self.n)

    @property
    def label(self):
        ks = ','.join(map(str, self.ks))
        return f"M^{{{ks}}}K_{{{len(self.ks)},{self.n}}}"

    @property
    def vertex_count(self):
        return len(self.ks) + self.n

    @property
    def support_size(self):
        return len(self.ks) * self.n

    @property
    def total_multiplicity(self):
        return self.n * sum(self.ks)

    def edges(self):
        n = self.n
        return [
            (p, n + i, ki) for i, ki in enumerate(self.ks) for p in range(n)
        ]

    def vertex_labels(self):
        return _bipartite_labels(len(self.ks), self.n)

    def count_formula(self):
        return formula_generalized_bipartite(self.ks, self.n)

    def count_recurrence(self):
        return generalized_bipartite_recurrence_dp(self.ks, self.n)


@dataclasses.dataclass(frozen=True)
class HalfCone(FamilySpec):
    k: int
    ks: tuple
    n: int

    name = 'half-cone'
    list_fields = ('ks',)

    def validate(self):
        _check_int('k', self.k)
        _check_ints('ks', self.ks)
        _check_int('n', self.n)

    @property
    def label(self):
        ks = ','.join(map(str, self.ks))
        return f"F^{self.k}M^{{{ks}}}K_{{{len(self.ks)},{self.n}}}"

    @property
    def vertex_count(self):
        return len(self.ks) + self.n + 1

    @property
    def support_size(self):
        return len(self.ks) * (self.n + 1)

    @property
    def total_multiplicity(self):
        # n * sum(ks) bipartite edges plus m * k apex edges
        return self.n * sum(self.ks) + len(self.ks) * self.k

    def edges(self):
        n = self.n
        apex = n + len(self.ks)
        edges = GeneralizedBipartite(self.ks, n).edges()
        edges.extend((n + i, apex, self.k) for i in range(len(self.ks)))
        return edges

    def vertex_labels(self):
        return _bipartite_labels(len(self.ks), self.n) + ["p"]

    def count_formula(self):
        return formula_half_cone(self.k, self.ks, self.n)

    def count_recurrence(self):
        return half_cone_recurrence_dp(self.k, self.ks, self.n)


@dataclasses.dataclass(frozen=True)
class Multipartite(FamilySpec):
    parts: tuple

    name = 'multipartite'
    list_fields = ('parts',)

    def validate(self):
        _check_ints('parts', self.parts)

    @property
    def label(self):
        return f"K_{{{','.join(map(str, self.parts))}}}"

    @property
    def vertex_count(self):
        return sum(self.parts)

    @property
    def support_size(self):
        n = sum(self.parts)
        return (n * n - sum(x * x for x in self.parts)) // 2

    @property
    def total_multiplicity(self):
        return self.support_size

    def _part_of(self):
        return [i for i, size in enumerate(self.parts) for _ in range(size)]

    def edges(self):
        part = self._part_of()
        n = len(part)
        return [
            (u, v, 1)
            for u in range(n)
            for v in range(u + 1, n)
            if part[u] != part[v]
        ]

    def vertex_labels(self):
        return [
            f"v{i + 1}_{j + 1}"
            for i, size in enumerate(self.parts)
            for j in range(size)
        ]

    def count_formula(self):
        return formula_multipartite(self.parts)


FAMILIES = {
    klass.name: klass
    for klass in (
        Complete,
        Bipartite,
        Cone,
        ModifiedBipartite,
        GeneralizedBipartite,
        HalfCone,
        Multipartite,
    )
}


def build(spec):
    """The literal multigraph described by spec."""
    return spec.build()


def parse_family_spec(text):
    """Parse 'name:key=value:...' as written by FamilySpec.to_text(),
    e.g. 'half-cone:k=2:ks=1,3:n=3'.
    """
    name, _, rest = text.partition(':')
    try:
        klass = FAMILIES[name]
    except KeyError:
        raise InvalidFamilySpec(
            f"unknown family {name!r}; choose from {', '.join(FAMILIES)}"
        )
    fields = {f.name for f in dataclasses.fields(klass)}
    kwargs = {}
    for item in filter(None, rest.split(':')):
        key, sep, value = item.partition('=')
        if not sep or key not in fields:
            raise InvalidFamilySpec(f"bad parameter {item!r} for {name}")
        try:
            if key in klass.list_fields:
                kwargs[key] = tuple(int(x) for x in value.split(','))
            else:
                kwargs[key] = int(value)
        except ValueError:
            raise InvalidFamilySpec(f"bad value in {item!r}")
    missing = fields - set(kwargs)
    if missing:
        raise InvalidFamilySpec(
            f"missing parameters for {name}: {', '.join(sorted(missing))}"
        )
    return klass(**kwargs)
