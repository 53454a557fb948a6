"""Finite commutative rings and modules as explicit operation tables.

Elements are indices 0..size-1; addition, multiplication and scalar action
are dense lookup tables, so every structural statement is decidable by
exhaustive scan.  All values are immutable after construction and every
operation is a pure function of its inputs.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from itertools import product as _iproduct
from typing import Iterable, Sequence, Union

import numpy as np

# Carrier size policy: keeps every exhaustive scan tractable.
MAX_CARRIER = 200


class EngineError(Exception):
    """Base class for all engine failures."""


class ConstructionError(EngineError):
    """An explicit table violates a ring/module axiom."""

    def __init__(self, axiom: str, witness: tuple):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"axiom {axiom!r} violated at {witness!r}")


class CarrierError(EngineError):
    """Operands live on mismatched carriers."""


class BoundExceededError(EngineError):
    """A requested carrier exceeds the size policy."""


class IntegrityError(EngineError):
    """An internal cross-check failed; signals an engine bug, never a finding."""


def _freeze(table, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int32)
    if arr.shape != shape:
        raise ConstructionError("table-shape", (arr.shape, shape))
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


def _check_range(arr: np.ndarray, size: int, what: str) -> None:
    if arr.size and (arr.min() < 0 or arr.max() >= size):
        bad = np.argwhere((arr < 0) | (arr >= size))[0]
        raise ConstructionError(f"{what}-entry-out-of-range", tuple(int(v) for v in bad))


def _first_triple(n: int, fails) -> tuple[int, int, int]:
    # Lexicographically first failing (i, j, k); only called once a fast
    # vectorized check has already established that some triple fails.
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if fails(i, j, k):
                    return (i, j, k)
    raise AssertionError("vectorized check disagreed with scalar rescan")


def _check_abelian_group(add: np.ndarray, zero: int, tag: str) -> None:
    n = add.shape[0]
    _check_range(add, n, f"{tag}-add")
    if not np.array_equal(add, add.T):
        i, j = (int(v) for v in np.argwhere(add != add.T)[0])
        raise ConstructionError(f"{tag}-add-commutative", (i, j))
    if not np.array_equal(add[zero], np.arange(n)):
        j = int(np.flatnonzero(add[zero] != np.arange(n))[0])
        raise ConstructionError(f"{tag}-add-identity", (zero, j))
    if not (add == zero).any(axis=1).all():
        i = int(np.flatnonzero(~(add == zero).any(axis=1))[0])
        raise ConstructionError(f"{tag}-add-inverse", (i,))
    for i in range(n):
        if not np.array_equal(add[add[i], :], add[i, add]):
            raise ConstructionError(
                f"{tag}-add-associative",
                _first_triple(n, lambda a, b, c: add[add[a, b], c] != add[a, add[b, c]]),
            )


def validate_ring_tables(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> None:
    """Exhaustive axiom scan; raises ConstructionError naming the first violation."""
    n = add.shape[0]
    _check_abelian_group(add, zero, "ring")
    _check_range(mul, n, "ring-mul")
    if not np.array_equal(mul, mul.T):
        i, j = (int(v) for v in np.argwhere(mul != mul.T)[0])
        raise ConstructionError("mul-commutative", (i, j))
    if not np.array_equal(mul[one], np.arange(n)):
        j = int(np.flatnonzero(mul[one] != np.arange(n))[0])
        raise ConstructionError("mul-identity", (one, j))
    for i in range(n):
        if not np.array_equal(mul[mul[i], :], mul[i, mul]):
            raise ConstructionError(
                "mul-associative",
                _first_triple(n, lambda a, b, c: mul[mul[a, b], c] != mul[a, mul[b, c]]),
            )
    for i in range(n):
        if not np.array_equal(mul[i, add], add[mul[i][:, None], mul[i][None, :]]):
            raise ConstructionError(
                "distributive",
                _first_triple(n, lambda a, b, c: mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]),
            )


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """Commutative ring with identity on indices 0..size-1."""

    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    construction: str = "explicit"
    # Mixed-radix shape for carriers whose elements are naturally tuples
    # (direct products, group rings); None for plain carriers.
    tuple_shape: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return self.add.shape[0]

    @cached_property
    def add_rows(self) -> list[list[int]]:
        return self.add.tolist()

    @cached_property
    def mul_rows(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.argmax(self.add == self.zero, axis=1))

    @cached_property
    def units(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.flatnonzero((self.mul == self.one).any(axis=1)))

    @cached_property
    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(b"ring")
        h.update(str(self.size).encode())
        h.update(self.add.astype("<i4").tobytes())
        h.update(self.mul.astype("<i4").tobytes())
        h.update(f"{self.zero},{self.one}".encode())
        return h.hexdigest()[:16]

    def element_name(self, i: int) -> str:
        if self.tuple_shape is None:
            return str(i)
        return str(index_to_tuple(self.tuple_shape, i))

    def __repr__(self) -> str:
        return f"FiniteRing({self.construction}, size={self.size})"


def validate_module_tables(ring: FiniteRing, add: np.ndarray, act: np.ndarray, zero: int) -> None:
    m = add.shape[0]
    _check_abelian_group(add, zero, "module")
    _check_range(act, m, "action")
    if act.shape != (ring.size, m):
        raise ConstructionError("action-shape", (act.shape, (ring.size, m)))
    if not np.array_equal(act[ring.one], np.arange(m)):
        j = int(np.flatnonzero(act[ring.one] != np.arange(m))[0])
        raise ConstructionError("action-unital", (ring.one, j))
    def _first_pair(rows, cols, fails):
        for b in range(rows):
            for c in range(cols):
                if fails(b, c):
                    return (b, c)
        raise AssertionError("vectorized check disagreed with scalar rescan")

    for r in range(ring.size):
        if not np.array_equal(act[r, add], add[act[r][:, None], act[r][None, :]]):
            b, c = _first_pair(m, m, lambda b, c: act[r, add[b, c]] != add[act[r, b], act[r, c]])
            raise ConstructionError("action-distributes-over-module-addition", (r, b, c))
    radd = ring.add
    for r in range(ring.size):
        if not np.array_equal(act[radd[r], :], add[act[r][None, :], act]):
            b, c = _first_pair(ring.size, m, lambda b, c: act[radd[r, b], c] != add[act[r, c], act[b, c]])
            raise ConstructionError("action-distributes-over-scalar-addition", (r, b, c))
    rmul = ring.mul
    for r in range(ring.size):
        if not np.array_equal(act[rmul[r], :], act[r, act]):
            b, c = _first_pair(ring.size, m, lambda b, c: act[rmul[r, b], c] != act[r, act[b, c]])
            raise ConstructionError("action-compatible-with-multiplication", (r, b, c))


@dataclass(frozen=True, eq=False)
class FiniteModule:
    """Unitary module over a FiniteRing, given by add and scalar-action tables."""

    ring: FiniteRing
    add: np.ndarray
    act: np.ndarray  # shape (ring.size, size)
    zero: int
    construction: str = "explicit"
    tuple_shape: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return self.add.shape[0]

    @cached_property
    def add_rows(self) -> list[list[int]]:
        return self.add.tolist()

    @cached_property
    def act_rows(self) -> list[list[int]]:
        return self.act.tolist()

    @cached_property
    def neg(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.argmax(self.add == self.zero, axis=1))

    @cached_property
    def digest(self) -> str:
        h = hashlib.sha256()
        h.update(b"module")
        h.update(self.ring.digest.encode())
        h.update(str(self.size).encode())
        h.update(self.add.astype("<i4").tobytes())
        h.update(self.act.astype("<i4").tobytes())
        h.update(str(self.zero).encode())
        return h.hexdigest()[:16]

    def element_name(self, i: int) -> str:
        if self.tuple_shape is None:
            return str(i)
        return str(index_to_tuple(self.tuple_shape, i))

    def __repr__(self) -> str:
        return f"FiniteModule({self.construction}, size={self.size}, over {self.ring.construction})"


Carrier = Union[FiniteRing, FiniteModule]


# ---------------------------------------------------------------------------
# tuple <-> index codecs for product / group-ring carriers (row-major)

def index_to_tuple(shape: Sequence[int], idx: int) -> tuple[int, ...]:
    out = []
    for s in reversed(shape):
        idx, r = divmod(idx, s)
        out.append(r)
    return tuple(reversed(out))


def tuple_to_index(shape: Sequence[int], tup: Sequence[int]) -> int:
    if len(tup) != len(shape):
        raise CarrierError(f"tuple {tup!r} does not match carrier shape {tuple(shape)!r}")
    idx = 0
    for s, t in zip(shape, tup):
        if not 0 <= t < s:
            raise CarrierError(f"tuple entry {t} out of range for shape {tuple(shape)!r}")
        idx = idx * s + t
    return idx


# ---------------------------------------------------------------------------
# Ring construction

def _check_bound(size: int) -> None:
    if size > MAX_CARRIER:
        raise BoundExceededError(f"carrier size {size} exceeds policy bound {MAX_CARRIER}")


def cyclic_ring(n: int) -> FiniteRing:
    """Residue ring of order n (n >= 2)."""
    if n < 2:
        raise ConstructionError("cyclic-order", (n,))
    _check_bound(n)
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    ring = FiniteRing(_freeze(add, (n, n)), _freeze(mul, (n, n)), 0, 1, f"cyclic({n})")
    validate_ring_tables(ring.add, ring.mul, ring.zero, ring.one)
    return ring


def product_ring(factors: Sequence[FiniteRing]) -> FiniteRing:
    if not factors:
        raise ConstructionError("product-empty", ())
    shape: list[int] = []
    for f in factors:
        shape.extend(f.tuple_shape or (f.size,))
    sizes = [f.size for f in factors]
    size = int(np.prod(sizes))
    _check_bound(size)
    flat = list(_iproduct(*[range(s) for s in sizes]))
    pos = {t: i for i, t in enumerate(flat)}
    add = np.empty((size, size), dtype=np.int32)
    mul = np.empty((size, size), dtype=np.int32)
    for i, ti in enumerate(flat):
        for j, tj in enumerate(flat):
            add[i, j] = pos[tuple(int(f.add[a, b]) for f, a, b in zip(factors, ti, tj))]
            mul[i, j] = pos[tuple(int(f.mul[a, b]) for f, a, b in zip(factors, ti, tj))]
    zero = pos[tuple(f.zero for f in factors)]
    one = pos[tuple(f.one for f in factors)]
    label = "product(" + ",".join(f.construction for f in factors) + ")"
    ring = FiniteRing(_freeze(add, (size, size)), _freeze(mul, (size, size)), zero, one,
                      label, tuple(sizes))
    validate_ring_tables(ring.add, ring.mul, ring.zero, ring.one)
    return ring


def group_ring(coeff: FiniteRing, orders: Sequence[int]) -> FiniteRing:
    """Group ring over a finite abelian group given by its cyclic orders.

    Elements are coefficient vectors indexed by group elements (identity slot
    first); multiplication is convolution over the group law.
    """
    orders = tuple(int(o) for o in orders)
    if any(o < 1 for o in orders):
        raise ConstructionError("group-order", orders)
    gelems = list(_iproduct(*[range(o) for o in orders]))
    gindex = {g: i for i, g in enumerate(gelems)}
    gsize = len(gelems)
    size = coeff.size ** gsize
    _check_bound(size)
    shape = (coeff.size,) * gsize
    vecs = [index_to_tuple(shape, i) for i in range(size)]
    gadd = [
        [gindex[tuple((a + b) % o for a, b, o in zip(ga, gb, orders))] for gb in gelems]
        for ga in gelems
    ]
    cadd, cmul = coeff.add_rows, coeff.mul_rows
    add = np.empty((size, size), dtype=np.int32)
    mul = np.empty((size, size), dtype=np.int32)
    for i, vi in enumerate(vecs):
        for j, vj in enumerate(vecs):
            add[i, j] = tuple_to_index(shape, tuple(cadd[a][b] for a, b in zip(vi, vj)))
            out = [coeff.zero] * gsize
            for a in range(gsize):
                if vi[a] == coeff.zero:
                    continue
                for b in range(gsize):
                    if vj[b] == coeff.zero:
                        continue
                    k = gadd[a][b]
                    out[k] = cadd[out[k]][cmul[vi[a]][vj[b]]]
            mul[i, j] = tuple_to_index(shape, tuple(out))
    one_vec = [coeff.zero] * gsize
    one_vec[0] = coeff.one
    label = f"group_ring({coeff.construction};{list(orders)})"
    ring = FiniteRing(_freeze(add, (size, size)), _freeze(mul, (size, size)),
                      0, tuple_to_index(shape, tuple(one_vec)), label, shape)
    validate_ring_tables(ring.add, ring.mul, ring.zero, ring.one)
    return ring


def explicit_ring(add, mul, zero: int, one: int) -> FiniteRing:
    n = len(add)
    _check_bound(n)
    ring = FiniteRing(_freeze(add, (n, n)), _freeze(mul, (n, n)), int(zero), int(one), "explicit")
    validate_ring_tables(ring.add, ring.mul, ring.zero, ring.one)
    if n > 1 and ring.zero == ring.one:
        raise ConstructionError("zero-equals-one", (ring.zero,))
    return ring


# Construction descriptors (mirrors the instance-file vocabulary).

def build_ring(spec: dict) -> FiniteRing:
    """Build a ring from a descriptor dict: cyclic | product | group_ring | explicit."""
    kind = spec.get("kind")
    if kind == "cyclic":
        return cyclic_ring(int(spec["n"]))
    if kind == "product":
        return product_ring([build_ring(s) for s in spec["factors"]])
    if kind == "group_ring":
        return group_ring(build_ring(spec["coeff"]), spec["orders"])
    if kind == "explicit":
        return explicit_ring(spec["add"], spec["mul"], spec["zero"], spec["one"])
    raise ConstructionError("unknown-ring-kind", (kind,))


# ---------------------------------------------------------------------------
# Module construction

def ring_as_module(ring: FiniteRing) -> FiniteModule:
    mod = FiniteModule(ring, ring.add, ring.mul, ring.zero, "ring", ring.tuple_shape)
    validate_module_tables(ring, mod.add, mod.act, mod.zero)
    return mod


def product_module(factors: Sequence[FiniteModule]) -> FiniteModule:
    if not factors:
        raise ConstructionError("product-empty", ())
    ring = factors[0].ring
    for f in factors[1:]:
        if f.ring is not ring and f.ring.digest != ring.digest:
            raise CarrierError("product factors live over different rings")
    sizes = [f.size for f in factors]
    size = int(np.prod(sizes))
    _check_bound(size)
    flat = list(_iproduct(*[range(s) for s in sizes]))
    pos = {t: i for i, t in enumerate(flat)}
    add = np.empty((size, size), dtype=np.int32)
    for i, ti in enumerate(flat):
        for j, tj in enumerate(flat):
            add[i, j] = pos[tuple(int(f.add[a, b]) for f, a, b in zip(factors, ti, tj))]
    act = np.empty((ring.size, size), dtype=np.int32)
    for r in range(ring.size):
        for i, ti in enumerate(flat):
            act[r, i] = pos[tuple(int(f.act[r, a]) for f, a in zip(factors, ti))]
    zero = pos[tuple(f.zero for f in factors)]
    label = "product(" + ",".join(f.construction for f in factors) + ")"
    mod = FiniteModule(ring, _freeze(add, (size, size)), _freeze(act, (ring.size, size)),
                       zero, label, tuple(sizes))
    validate_module_tables(ring, mod.add, mod.act, mod.zero)
    return mod


def explicit_module(ring: FiniteRing, add, act, zero: int) -> FiniteModule:
    m = len(add)
    _check_bound(m)
    mod = FiniteModule(ring, _freeze(add, (m, m)), _freeze(act, (ring.size, m)),
                       int(zero), "explicit")
    validate_module_tables(ring, mod.add, mod.act, mod.zero)
    return mod


def build_module(spec: dict, ring: FiniteRing) -> FiniteModule:
    """Build a module from a descriptor dict: ring | product | explicit."""
    kind = spec.get("kind")
    if kind == "ring":
        return ring_as_module(ring)
    if kind == "product":
        return product_module([build_module(s, ring) for s in spec["factors"]])
    if kind == "explicit":
        return explicit_module(ring, spec["add"], spec["action"], spec["zero"])
    raise ConstructionError("unknown-module-kind", (kind,))


# ---------------------------------------------------------------------------
# Canonical subsets

@dataclass(frozen=True, eq=False)
class AlgebraicSubset:
    """Canonically sorted element set closed under the operations of its kind."""

    kind: str  # 'ideal' | 'submodule'
    carrier: Carrier
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("ideal", "submodule"):
            raise CarrierError(f"unknown subset kind {self.kind!r}")
        if tuple(sorted(set(self.elements))) != self.elements:
            raise CarrierError("subset elements must be sorted and duplicate-free")

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def contains(self, i: int) -> bool:
        return i in self.member_set

    @property
    def is_whole(self) -> bool:
        return len(self.elements) == self.carrier.size

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraicSubset)
            and self.kind == other.kind
            and self.carrier is other.carrier
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.kind, id(self.carrier), self.elements))

    def __repr__(self) -> str:
        return f"AlgebraicSubset({self.kind}, {list(self.elements)})"


def _closure_tables(carrier: Carrier, kind: str):
    if kind == "ideal":
        if not isinstance(carrier, FiniteRing):
            raise CarrierError("ideal requested on a non-ring carrier")
        return carrier.add_rows, carrier.mul_rows, range(carrier.size), carrier.zero
    if not isinstance(carrier, FiniteModule):
        raise CarrierError("submodule requested on a non-module carrier")
    return carrier.add_rows, carrier.act_rows, range(carrier.ring.size), carrier.zero


def closed_span(add_rows, zero: int, act_rows, scalars, generators: Iterable[int]) -> tuple[int, ...]:
    """Smallest subset containing generators, closed under + and the given scalars.

    Worklist closure; termination by finiteness.  Negation closure follows from
    additive closure on a finite carrier.
    """
    elems = [zero]
    seen = {zero}
    for g in generators:
        if g not in seen:
            seen.add(g)
            elems.append(g)
    i = 0
    while i < len(elems):
        x = elems[i]
        for s in scalars:
            y = act_rows[s][x]
            if y not in seen:
                seen.add(y)
                elems.append(y)
        row = add_rows[x]
        for j in range(len(elems)):
            y = row[elems[j]]
            if y not in seen:
                seen.add(y)
                elems.append(y)
        i += 1
    return tuple(sorted(seen))


def span(carrier: Carrier, kind: str, generators: Iterable[int]) -> AlgebraicSubset:
    """Smallest ideal/submodule containing the generators."""
    add_rows, act_rows, scalars, zero = _closure_tables(carrier, kind)
    gens = list(generators)
    for g in gens:
        if not 0 <= g < carrier.size:
            raise CarrierError(f"generator {g} out of range")
    return AlgebraicSubset(kind, carrier, closed_span(add_rows, zero, act_rows, scalars, gens))


def additive_span(add_rows, zero: int, seed: Iterable[int]) -> tuple[int, ...]:
    return closed_span(add_rows, zero, (), (), seed)


def product_span(add_rows, zero: int, table_rows, a_elems, b_elems) -> tuple[int, ...]:
    """Additive closure of the pairwise products table[a][b]."""
    prods = {table_rows[a][b] for a in a_elems for b in b_elems}
    return additive_span(add_rows, zero, sorted(prods))


def subset_product(a: AlgebraicSubset, b: AlgebraicSubset) -> AlgebraicSubset:
    """Product of an ideal with an ideal or submodule: additive span of {x*y}."""
    if a.kind != "ideal":
        raise CarrierError("left factor of subset_product must be an ideal")
    ring = a.carrier
    if b.kind == "ideal":
        if b.carrier is not ring:
            raise CarrierError("ideal product across different rings")
        table = ring.mul_rows
    else:
        mod = b.carrier
        if mod.ring is not ring and mod.ring.digest != ring.digest:
            raise CarrierError("ideal acts on a module over a different ring")
        table = mod.act_rows
    prods = sorted({table[x][y] for x in a.elements for y in b.elements})
    return span(b.carrier, b.kind, prods)


def colon_into_ring(n: AlgebraicSubset, m: FiniteModule) -> AlgebraicSubset:
    """The ideal of scalars carrying the whole module into n."""
    if n.kind != "submodule" or n.carrier is not m:
        raise CarrierError("colon_into_ring expects a submodule of the given module")
    mask = np.zeros(m.size, dtype=bool)
    mask[list(n.elements)] = True
    ok = mask[m.act].all(axis=1)
    return AlgebraicSubset("ideal", m.ring, tuple(int(v) for v in np.flatnonzero(ok)))


def colon_into_module(n: AlgebraicSubset, r: int) -> AlgebraicSubset:
    """The submodule of elements carried into n by the scalar r."""
    if n.kind != "submodule":
        raise CarrierError("colon_into_module expects a submodule")
    m: FiniteModule = n.carrier
    if not 0 <= r < m.ring.size:
        raise CarrierError(f"scalar {r} out of range")
    mask = np.zeros(m.size, dtype=bool)
    mask[list(n.elements)] = True
    return AlgebraicSubset("submodule", m, tuple(int(v) for v in np.flatnonzero(mask[m.act[r]])))


# ---------------------------------------------------------------------------
# Relative (subset-scoped) helpers, used for identity-degree components

def relative_colon_scalars(act_rows, scalars, space, target_set) -> tuple[int, ...]:
    """{s in scalars : s * space is contained in target_set}."""
    out = []
    for s in scalars:
        row = act_rows[s]
        if all(row[x] in target_set for x in space):
            out.append(s)
    return tuple(out)


def relative_colon_space(act_rows, r: int, space, target_set) -> tuple[int, ...]:
    """{x in space : r * x lies in target_set}."""
    row = act_rows[r]
    return tuple(x for x in space if row[x] in target_set)


def power_reaches(mul_rows, x: int, target_set) -> bool:
    """True iff some positive power of x lands in target_set (cycle-bounded)."""
    seen = set()
    p = x
    while p not in seen:
        if p in target_set:
            return True
        seen.add(p)
        p = mul_rows[p][x]
    return False


def enumerate_closed_subsets(add_rows, zero: int, act_rows, scalars, candidates) -> list[tuple[int, ...]]:
    """All subsets closed under + and the given scalars, reachable from candidates.

    Breadth-first over single-generator extensions; since every closed subset is
    the closure of finitely many of its elements, this enumerates them all.
    Output sorted lexicographically for determinism.
    """
    base = closed_span(add_rows, zero, act_rows, scalars, ())
    found = {base}
    frontier = [base]
    cand = sorted(set(candidates))
    while frontier:
        cur = frontier.pop(0)
        cur_set = set(cur)
        for c in cand:
            if c in cur_set:
                continue
            ext = closed_span(add_rows, zero, act_rows, scalars, cur + (c,))
            if ext not in found:
                found.add(ext)
                frontier.append(ext)
    return sorted(found)
