"""Embedded data: root lattices, Niemeier glue codes, the Leech lattice,
Schellekens' list, the Frame-shape classes and the golden tables."""

from __future__ import annotations

import json
from collections import Counter
import os
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from . import exact
from .enumeration import vectors_up_to_norm
from .lattice import Lattice

ENV_DATA = "ORBIFOLDER_DATA"


def data_dir() -> Path:
    override = os.environ.get(ENV_DATA)
    if override:
        return Path(override)
    return Path(str(resources.files("orbifolder") / "data"))


def load_json(name: str):
    return json.loads((data_dir() / name).read_text())


# ---------------------------------------------------------------------------
# Root lattices


def cartan_matrix(kind: str, n: int) -> exact.IntMatrix:
    """Cartan matrix of a simply-laced type in Bourbaki numbering."""
    edges: list[tuple[int, int]] = []
    if kind == "A":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "D":
        if n < 4:
            raise ValueError("D_n needs n ≥ 4")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    elif kind == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in 6..8")
        edges = [(0, 2), (2, 3), (3, 4), (1, 3)] + [(i, i + 1) for i in range(4, n - 1)]
    else:
        raise ValueError(f"unknown root lattice type {kind}")
    c = [[2 * int(i == j) for j in range(n)] for i in range(n)]
    for i, j in edges:
        c[i][j] = c[j][i] = -1
    return exact.as_matrix(c)


def glue_node(kind: str, n: int, g: int) -> Optional[int]:
    """Index of the fundamental weight representing glue class [g]."""
    if g == 0:
        return None
    if kind == "A":
        return g - 1
    if kind == "D":
        return {1: n - 1, 2: 0, 3: n - 2}[g]
    if kind == "E" and n == 6:
        return {1: 0, 2: 5}[g]
    if kind == "E" and n == 7:
        return {1: 6}[g]
    raise ValueError(f"no glue class [{g}] for {kind}{n}")


def root_count(kind: str, n: int) -> int:
    if kind == "A":
        return n * (n + 1)
    if kind == "D":
        return 2 * n * (n - 1)
    return {6: 72, 7: 126, 8: 240}[n]


@dataclass(frozen=True)
class NiemeierSpec:
    label: str
    root_system: str
    components: tuple[tuple[str, int], ...]
    glue: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def niemeier_specs() -> dict[str, NiemeierSpec]:
    out = {}
    for item in load_json("niemeier.json"):
        out[item["label"]] = NiemeierSpec(item["label"], item["root_system"],
                                          tuple((t, n) for t, n in item["components"]),
                                          tuple(tuple(w) for w in item["glue"]))
    return out


NIEMEIER_LABELS = tuple(f"A{i}" for i in range(1, 25))


def glue_vector(spec: NiemeierSpec, word: Sequence[int]) -> tuple[Fraction, ...]:
    """Glue word in simple-root coordinates of the root lattice."""
    out: list[Fraction] = []
    for (kind, n), g in zip(spec.components, word):
        node = glue_node(kind, n, g)
        if node is None:
            out += [Fraction(0)] * n
        else:
            inv = exact.inverse(cartan_matrix(kind, n))
            out += [inv[k][node] for k in range(n)]
    return tuple(out)


def block_diagonal(blocks: Sequence[Sequence[Sequence[int]]]) -> exact.IntMatrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = b[i][j]
        off += k
    return exact.as_matrix(out)


@dataclass(frozen=True)
class Frame:
    """A basis (rows) of the lattice in construction coordinates.

    For Niemeier lattices with roots these are simple-root coordinates of
    the root sublattice with inner product ``form``; for the Leech lattice
    they are the scaled coordinates √8·x with form I/8.
    """

    basis: exact.RatMatrix
    form: exact.RatMatrix

    def to_lattice_matrix(self, p: Sequence[Sequence]) -> exact.IntMatrix:
        """Matrix on lattice coordinates of the map acting by P on frame columns."""
        bt = exact.transpose(self.basis)
        m = exact.mat_mul(exact.mat_mul(exact.inverse(bt), p), bt)
        if any(Fraction(x).denominator != 1 for r in m for x in r):
            raise ValueError("map does not preserve the lattice")
        return tuple(tuple(int(x) for x in r) for r in m)


@lru_cache(maxsize=None)
def _build(label: str) -> tuple[Lattice, Frame]:
    if label == "A24":
        return _build_leech()
    spec = niemeier_specs().get(label)
    if spec is None:
        raise KeyError(f"unknown Niemeier label {label!r}")
    form = block_diagonal([cartan_matrix(t, n) for t, n in spec.components])
    rk = len(form)
    gens = [tuple(Fraction(int(i == j)) for j in range(rk)) for i in range(rk)]
    gens += [glue_vector(spec, w) for w in spec.glue]
    basis = exact.lattice_basis(gens)
    gram = exact.mat_mul(exact.mat_mul(basis, form), exact.transpose(basis))
    gram = tuple(tuple(int(x) for x in r) for r in gram)
    positivity = tuple(sum(r) for r in basis)  # height functional
    lat = Lattice(gram, label, positivity)
    return lat, Frame(basis, tuple(tuple(Fraction(x) for x in r) for r in form))


def golay_code_generators() -> list[tuple[int, ...]]:
    """Generators of the extended binary Golay code (the A1²⁴ glue code)."""
    return [tuple(w) for w in niemeier_specs()["A23"].glue]


def binary_span(gens: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All codewords of the binary code spanned by ``gens``."""
    basis = []
    for g in gens:
        v = int("".join(str(x % 2) for x in g), 2)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    n = len(gens[0])
    words = {0}
    for b in basis:
        words |= {w ^ b for w in words}
    return sorted(tuple(int(c) for c in format(w, f"0{n}b")) for w in words)


def _build_leech() -> tuple[Lattice, Frame]:
    code = binary_span(golay_code_generators())
    n = 24
    gens = [tuple(2 * x for x in c) for c in code if sum(c) == 8]
    for i in range(n):
        for j in range(i + 1, n):
            v = [0] * n
            v[i] = v[j] = 4
            gens.append(tuple(v))
    gens.append(tuple([-3] + [1] * (n - 1)))
    basis = exact.hermite_normal_form(gens)
    gram = exact.mat_mul(basis, exact.transpose(basis))
    gram = tuple(tuple(x // 8 for x in r) for r in gram)
    form = tuple(tuple(Fraction(int(i == j), 8) for j in range(n)) for i in range(n))
    lat = Lattice(gram, "A24")
    return lat, Frame(tuple(tuple(Fraction(x) for x in r) for r in basis), form)


def build_niemeier(label: str) -> Lattice:
    return _build(label)[0]


def niemeier_frame(label: str) -> Frame:
    return _build(label)[1]


def leech() -> Lattice:
    return build_niemeier("A24")


# ---------------------------------------------------------------------------
# Roots


_ROOTS: dict[exact.IntMatrix, tuple] = {}


def roots(L: Lattice) -> tuple[tuple[int, ...], ...]:
    """All norm-2 vectors of L, sorted."""
    key = L.gram
    if key not in _ROOTS:
        _ROOTS[key] = tuple(v for v in vectors_up_to_norm(L, 2))
    return _ROOTS[key]


def positivity_functional(L: Lattice, seed: int = 20240607) -> tuple[Fraction, ...]:
    rs = roots(L)
    if L.positivity is not None:
        f = L.positivity
        if all(exact.dot(f, r) != 0 for r in rs):
            return tuple(Fraction(x) for x in f)
    rng = random.Random(seed)
    while True:
        f = tuple(Fraction(rng.randint(-10 ** 6, 10 ** 6)) for _ in range(L.rank))
        if all(exact.dot(f, r) != 0 for r in rs):
            return f


_SIMPLE: dict[exact.IntMatrix, tuple] = {}


def simple_roots(L: Lattice) -> tuple[tuple[int, ...], ...]:
    """Indecomposable positive roots for the positivity functional of L."""
    if L.gram in _SIMPLE:
        return _SIMPLE[L.gram]
    f = positivity_functional(L)
    pos = [r for r in roots(L) if exact.dot(f, r) > 0]
    posset = set(pos)
    pos.sort(key=lambda r: exact.dot(f, r))
    simple = []
    for a in pos:
        fa = exact.dot(f, a)
        decomposable = False
        for b in pos:
            if exact.dot(f, b) >= fa:
                break
            if tuple(x - y for x, y in zip(a, b)) in posset:
                decomposable = True
                break
        if not decomposable:
            simple.append(a)
    _SIMPLE[L.gram] = tuple(sorted(simple))
    return _SIMPLE[L.gram]


def _classify(rank: int, count: int) -> str:
    if count == rank * (rank + 1) and rank != 3 or (rank == 3 and count == 12):
        return f"A{rank}"
    if rank >= 4 and count == 2 * rank * (rank - 1):
        return f"D{rank}"
    if (rank, count) in ((6, 72), (7, 126), (8, 240)):
        return f"E{rank}"
    raise ValueError(f"component of rank {rank} with {count} roots is not of ADE type")


def root_components(L: Lattice) -> list[tuple[list, list]]:
    """Connected components as (simple roots, roots) pairs."""
    delta = simple_roots(L)
    g = L.gram
    gd = [exact.mat_vec(g, d) for d in delta]
    parent = list(range(len(delta)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(delta)):
        for j in range(i):
            if exact.dot(delta[i], gd[j]) != 0:
                parent[find(i)] = find(j)
    comps: dict[int, tuple[list, list]] = {}
    for i, d in enumerate(delta):
        comps.setdefault(find(i), ([], []))[0].append(d)
    for r in roots(L):
        i = next(i for i in range(len(delta)) if exact.dot(r, gd[i]) != 0)
        comps[find(i)][1].append(r)
    return sorted(comps.values(), key=lambda c: (-len(c[1]), c[0]))


def identify_root_system(L: Lattice) -> tuple[str, ...]:
    """Multiset of ADE components, sorted by type then rank (descending)."""
    names = [_classify(len(s), len(r)) for s, r in root_components(L)]
    return tuple(sorted(names, key=lambda s: (s[0], -int(s[1:]))))


def root_system_label(names: Sequence[str]) -> str:
    if not names:
        return "Leech"
    counts: dict[str, int] = {}
    for n in names:
        counts[n] = counts.get(n, 0) + 1
    parts = []
    for n in sorted(counts, key=lambda s: (s[0], -int(s[1:]))):
        parts.append(n if counts[n] == 1 else f"{n}^{counts[n]}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# Lie algebras and Schellekens' list


def lie_dim(kind: str, n: int) -> int:
    if kind == "A":
        return n * (n + 2)
    if kind in "BC":
        return n * (2 * n + 1)
    if kind == "D":
        return n * (2 * n - 1)
    if kind == "E":
        return {6: 78, 7: 133, 8: 248}[n]
    if kind == "F":
        return 52
    if kind == "G":
        return 14
    if kind == "U":
        return n
    raise ValueError(kind)


def root_norm_counts(kind: str, n: int, level: int) -> Counter:
    """Norms of the roots of a simple summand X_{n,level}, long roots of norm 2/level."""
    if kind == "U":
        return Counter()
    long = Fraction(2, level)
    if kind == "B" and n > 1:
        return Counter({long: 2 * n * (n - 1), long / 2: 2 * n})
    if kind == "C" and n > 1:
        return Counter({long: 2 * n, long / 2: 2 * n * (n - 1)})
    if kind == "F":
        return Counter({long: 24, long / 2: 24})
    if kind == "G":
        return Counter({long: 6, long / 3: 6})
    return Counter({long: lie_dim(kind, n) - n})


def entry_root_norms(entry: "SchellekensEntry") -> Counter:
    out = Counter()
    for kind, n, level in entry.summands:
        out += root_norm_counts(kind, n, level)
    return out


_SUMMAND = re.compile(r"^([A-GU])(\d+)(?:,(\d+))?(?:\^(\d+))?$")


def parse_lie(text: str) -> tuple[tuple[str, int, int], ...]:
    """'A1,2 A5,6^2' → ((A,1,2), (A,5,6), (A,5,6)); abelian 'U24' has level 0."""
    out = []
    for tok in text.split():
        m = _SUMMAND.match(tok)
        if not m:
            raise ValueError(f"cannot parse Lie summand {tok!r}")
        kind, n, k, mult = m.group(1), int(m.group(2)), int(m.group(3) or 0), int(m.group(4) or 1)
        out += [(kind, n, k)] * mult
    return tuple(out)


@dataclass(frozen=True)
class SchellekensEntry:
    number: int
    lie: str
    summands: tuple[tuple[str, int, int], ...]
    dim: int
    rank: int


@lru_cache(maxsize=None)
def schellekens() -> dict[int, SchellekensEntry]:
    out = {}
    for item in load_json("schellekens.json"):
        s = parse_lie(item["lie"])
        dim = sum(lie_dim(t, n) for t, n, _ in s)
        rk = sum(n for _, n, _ in s)
        out[item["number"]] = SchellekensEntry(item["number"], item["lie"], s, dim, rk)
    return out


def schellekens_candidates(dim: int, rank: int) -> list[SchellekensEntry]:
    return [e for e in schellekens().values() if e.dim == dim and e.rank == rank]


# ---------------------------------------------------------------------------
# Frame classes, Table 2 and the golden tables


@dataclass(frozen=True)
class FrameClass:
    family: str
    frame_shape: tuple[tuple[int, int], ...]
    order: int
    order_doubling: bool
    genus: str
    class_number: int
    voa_count: int

    @property
    def rank(self) -> int:
        return sum(b for _, b in self.frame_shape)


@lru_cache(maxsize=None)
def frame_classes() -> dict[str, FrameClass]:
    from math import lcm
    out = {}
    for item in load_json("frame_classes.json"):
        fs = tuple(sorted((int(t), b) for t, b in item["frame_shape"].items()))
        out[item["family"]] = FrameClass(item["family"], fs, lcm(*(t for t, _ in fs)),
                                         item["order_doubling"], item["genus"],
                                         item["class_number"], item["voa_count"])
    return out


def family_of_frame_shape(fs) -> Optional[str]:
    key = tuple(sorted((t, b) for t, b in dict(fs).items() if b))
    for fam, fc in frame_classes().items():
        if fc.frame_shape == key:
            return fam
    return None


@lru_cache(maxsize=None)
def table2() -> dict:
    return load_json("table2.json")


@lru_cache(maxsize=None)
def golden_tables() -> dict:
    return load_json("golden.json")


@lru_cache(maxsize=None)
def power_tables() -> dict:
    return load_json("powers.json")


def table2_cell(label: str, family: str) -> list[int]:
    t = table2()
    return t["rows"][label][t["families"].index(family)]


def golden_lookup(family: str, label: str, tag: Optional[int] = None) -> list[tuple[int, int]]:
    """(Schellekens number, multiplicity) pairs of the stored column(s).

    With ``tag`` None all columns of ``label`` in the family are merged.
    """
    table = golden_tables().get(family)
    if table is None:
        raise KeyError(f"unknown family {family!r}")
    idx = [i for i, (lab, t) in enumerate(table["columns"]) if lab == label and (tag is None or t == tag)]
    if not idx:
        raise KeyError(f"no column for {label!r} in family {family!r}")
    out: dict[int, int] = {}
    for row in table["rows"]:
        c = sum(row["counts"][i] for i in idx)
        if c:
            out[row["number"]] = out.get(row["number"], 0) + c
    return sorted(out.items(), key=lambda kv: -kv[0])


def golden_columns(family: str, label: str) -> list[int]:
    table = golden_tables()[family]
    return [t for lab, t in table["columns"] if lab == label]


def row_id(family: str, number: int) -> str:
    for row in golden_tables()[family]["rows"]:
        if row["number"] == number:
            return row["id"]
    raise KeyError((family, number))


def number_of_row(row: str) -> tuple[str, int]:
    for fam, table in golden_tables().items():
        for r in table["rows"]:
            if r["id"] == row:
                return fam, r["number"]
    raise KeyError(row)


# ---------------------------------------------------------------------------
# Root systems given by vectors (possibly non-simply-laced)


def _lie_name(rank: int, count: int, norms: list) -> str:
    lengths = sorted(set(norms))
    if len(lengths) == 1:
        return _classify(rank, count)
    if len(lengths) != 2:
        raise ValueError("root system component with more than two root lengths")
    short = sum(1 for x in norms if x == lengths[0])
    long_ = count - short
    if rank == 2 and count == 12:
        return "G2"
    if rank == 4 and count == 48:
        return "F4"
    if count == 2 * rank * rank:
        if short == 2 * rank:
            return f"B{rank}"
        if long_ == 2 * rank:
            return f"C{rank}"
    raise ValueError(f"component of rank {rank} with {count} roots is not a root system")


def normalize_lie_name(kind: str, n: int) -> str:
    """Canonical name under the low-rank coincidences A1=B1=C1, B2=C2, A3=D3."""
    if kind in "BC" and n == 1:
        return "A1"
    if kind == "C" and n == 2:
        return "B2"
    if kind == "D" and n == 3:
        return "A3"
    return f"{kind}{n}"


def classify_root_vectors(vectors: Sequence[Sequence], gram, seed: int = 20240607) -> tuple[str, ...]:
    """Type of the root system formed by ``vectors`` (ambient coordinates).

    The simple roots are the indecomposable positive roots for a seeded
    random functional; components are read off the simple roots.
    """
    if not vectors:
        return ()
    d = exact.common_denominator(x for v in vectors for x in v)
    vs = sorted({tuple(int(Fraction(x) * d) for x in v) for v in vectors})
    vset = set(vs)
    rng = random.Random(seed)
    n = len(vs[0])
    while True:
        f = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)]
        if all(exact.dot(f, v) != 0 for v in vs):
            break
    pos = sorted((v for v in vs if exact.dot(f, v) > 0), key=lambda v: exact.dot(f, v))
    posset = set(pos)
    simple = []
    for a in pos:
        fa = exact.dot(f, a)
        if not any(exact.dot(f, b) < fa and tuple(x - y for x, y in zip(a, b)) in posset for b in pos):
            simple.append(a)
    gs = [exact.mat_vec(gram, s) for s in simple]
    parent = list(range(len(simple)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(simple)):
        for j in range(i):
            if exact.dot(simple[i], gs[j]) != 0:
                parent[find(i)] = find(j)
    comps: dict[int, list] = {}
    for v in vs:
        i = next(i for i in range(len(simple)) if exact.dot(v, gs[i]) != 0)
        comps.setdefault(find(i), []).append(exact.quadratic_form(gram, v, v))
    ranks: dict[int, int] = {}
    for i in range(len(simple)):
        ranks[find(i)] = ranks.get(find(i), 0) + 1
    if any(tuple(-x for x in v) not in vset for v in vs):
        raise ValueError("root set is not closed under negation")
    names = [_lie_name(ranks[c], len(norms), norms) for c, norms in comps.items()]
    names = [normalize_lie_name(s[0], int(s[1:])) for s in names]
    return tuple(sorted(names, key=lambda s: (s[0], -int(s[1:]))))


def lie_type_key(names: Sequence[str], abelian: int) -> tuple:
    """Hashable description of a reductive Lie algebra: simple types plus abelian rank."""
    return (tuple(sorted(names, key=lambda s: (s[0], -int(s[1:])))), abelian)


def entry_type_key(entry: "SchellekensEntry") -> tuple:
    names = [normalize_lie_name(t, n) for t, n, _ in entry.summands if t != "U"]
    ab = sum(n for t, n, _ in entry.summands if t == "U")
    return lie_type_key(names, ab)


def format_lie_type(key: tuple) -> str:
    names, ab = key
    parts = list(names)
    if ab:
        parts.append(f"U{ab}")
    return " ".join(parts) if parts else "0"
