"""Generate the shipped isometry fixtures in src/orbifolder/data/fixtures.

Sources:
- M24 is generated as the automorphism group of the Golay code stored as
  the A1^24 glue code (coordinates ∞, 0..22), from x↦x+1, x↦2x, x↦−1/x and
  Conway's element fixing 0 and ∞ (x↦x³/9 on residues, 9x³ on
  non-residues). Every generator is checked to preserve the code.
- Leech fixtures are monomial elements ε_C·π (C a Golay codeword, π in
  M24) acting on the √8-scaled coordinates.
- A1^24 fixtures are the same permutations acting on the 24 components.
- The E8^3 fixture swaps the first two E8 components.

Elements are found by a seeded random walk in M24, so the output is
deterministic. Each fixture is validated by the package loader.
"""

import json
import random
from collections import Counter
from pathlib import Path

from orbifolder import catalog, exact
from orbifolder.isometry import fixture_from_dict

OUT = Path(__file__).resolve().parents[1] / "src" / "orbifolder" / "data" / "fixtures"
P = 23
INF = 0  # position of ∞; position 1 + x holds x ∈ F_23

QR = {(x * x) % P for x in range(1, P)}


def pos(x):
    return INF if x is None else 1 + x


def perm_from_map(f):
    """Position permutation p with p[i] = image of position i."""
    out = [0] * 24
    out[INF] = pos(f(None))
    for x in range(P):
        out[pos(x)] = pos(f(x))
    return tuple(out)


def inv_mod(x):
    return pow(x, P - 2, P)


def g_shift(x):
    return None if x is None else (x + 1) % P


def g_double(x):
    return None if x is None else (2 * x) % P


def g_invert(x):
    if x is None:
        return 0
    if x == 0:
        return None
    return (-inv_mod(x)) % P


def g_delta(x):
    if x is None or x == 0:
        return x
    c = pow(x, 3, P)
    return (c * inv_mod(9)) % P if x in QR else (9 * c) % P


def compose(p, q):
    """p after q."""
    return tuple(p[q[i]] for i in range(24))


def cycle_type(p):
    seen, lens = set(), []
    for i in range(24):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = p[j]
            k += 1
        lens.append(k)
    return Counter(lens)


def cycles(p):
    seen, out = set(), []
    for i in range(24):
        if i in seen:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j)
            j = p[j]
        out.append(c)
    return out


def shape_key(d):
    return tuple(sorted((int(t), int(b)) for t, b in d.items() if b))


def preserves(p, code):
    return all(permute_word(p, w) in code for w in code)


def permute_word(p, w):
    out = [0] * 24
    for i in range(24):
        out[p[i]] = w[i]
    return tuple(out)


def monomial_matrix(p, signs):
    """Matrix acting on columns: e_i ↦ signs[p(i)]·e_{p(i)}."""
    m = [[0] * 24 for _ in range(24)]
    for i in range(24):
        m[p[i]][i] = signs[p[i]]
    return m


def block_swap_matrix(sizes, a, b):
    offs = [sum(sizes[:k]) for k in range(len(sizes))]
    n = sum(sizes)
    target = list(range(n))
    for k in range(sizes[a]):
        target[offs[a] + k] = offs[b] + k
        target[offs[b] + k] = offs[a] + k
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        m[target[i]][i] = 1
    return m


def fixture(name, label, family, matrix_frame, shape, provenance):
    fr = catalog.niemeier_frame(label)
    mat = fr.to_lattice_matrix(matrix_frame)
    d = {
        "name": name,
        "lattice": label,
        "family": family,
        "claimed_frame_shape": {str(t): b for t, b in shape},
        "matrix": [[str(x) for x in r] for r in mat],
        "provenance": provenance,
    }
    fixture_from_dict(d, name)  # validates
    return d


def main():
    code = set(catalog.binary_span(catalog.golay_code_generators()))
    assert len(code) == 4096
    gens = [perm_from_map(f) for f in (g_shift, g_double, g_invert, g_delta)]
    for g in gens:
        assert preserves(g, code), "generator does not preserve the Golay code"

    classes = catalog.frame_classes()
    wanted = {}
    for fam, fc in classes.items():
        if fam in ("A", "J"):
            continue
        wanted[fam] = fc.frame_shape
    wanted["J*"] = ((1, 6), (3, 6))  # permutation part of the 2^3 6^3 element

    rng = random.Random(24)
    found = {}
    cur = tuple(range(24))
    steps = 0
    while len(found) < len(wanted):
        cur = compose(rng.choice(gens), cur)
        steps += 1
        key = shape_key(cycle_type(cur))
        for fam, shape in wanted.items():
            if fam not in found and key == shape:
                found[fam] = cur
    for fam, p in found.items():
        assert preserves(p, code)

    # 2^3 6^3: signs on a 1^6 3^6 permutation from a Golay word with three
    # negative fixed points and an odd number of signs on three 3-cycles
    p3 = found["J*"]
    cyc = cycles(p3)
    fixed = [c[0] for c in cyc if len(c) == 1]
    triples = [c for c in cyc if len(c) == 3]
    word_j = None
    for w in sorted(code):
        if sum(w[i] for i in fixed) != 3:
            continue
        odd = sum(1 for c in triples if sum(w[i] for i in c) % 2)
        if odd == 3:
            word_j = w
            break
    assert word_j is not None

    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.json"):
        old.unlink()
    out = []
    src_perm = "M24 element from a seeded random walk on the Golay-code generators"

    sizes = [8, 8, 8]
    out.append(fixture("A3_B_swap", "A3", "B", block_swap_matrix(sizes, 0, 1),
                       classes["B"].frame_shape, "swap of the first two E8 components"))
    for fam in sorted(wanted):
        if fam == "J*":
            continue
        p = found[fam]
        shape = classes[fam].frame_shape
        cells = catalog.table2()["rows"]
        idx = catalog.table2()["families"].index(fam)
        if cells["A23"][idx]:
            out.append(fixture(f"A23_{fam}", "A23", fam, monomial_matrix(p, [1] * 24), shape,
                               f"{src_perm}, acting on the 24 A1 components"))
        out.append(fixture(f"A24_{fam}", "A24", fam, monomial_matrix(p, [1] * 24), shape,
                           f"{src_perm}, acting on Leech coordinates"))
    signs = [-1 if x else 1 for x in word_j]
    out.append(fixture("A24_J", "A24", "J", monomial_matrix(p3, signs), classes["J"].frame_shape,
                       f"{src_perm} times the sign change on a Golay codeword"))

    for d in out:
        (OUT / f"{d['name']}.json").write_text(json.dumps(d, indent=1) + "\n")
    print(f"{len(out)} fixtures written after {steps} walk steps")


if __name__ == "__main__":
    main()
