"""Command-line front end.

Exit codes: 0 success, 1 comparison failure, 2 input error. JSON output is
deterministic (sorted keys, rationals as "p/q" strings).
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import catalog
from .isometry import (Fixture, Isometry, fixture_dir, frame_shape, identity_isometry, load_fixture,
                       stabilizes_simple_roots)
from .lattice import discriminant_group
from .lift import LiftedAutomorphism, standard_eta
from .orbifold import frac_str, report, report_to_dict
from . import search as search_mod


class InputError(click.ClickException):
    exit_code = 2


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _label(label: str) -> str:
    if label not in catalog.NIEMEIER_LABELS:
        raise InputError(f"unknown lattice label {label!r}")
    return label


def _parse_frac(x) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"bad rational {x!r}") from e


def _read_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read {path}: {e}") from e


def _isometry(L, rows) -> Isometry:
    try:
        return Isometry(L, tuple(tuple(int(x) for x in r) for r in rows))
    except (ValueError, TypeError) as e:
        raise InputError(str(e)) from e


@click.group()
def main():
    """Lattice orbifold invariants and short automorphism search."""


# ---------------------------------------------------------------------------
# catalog


@main.group("catalog")
def catalog_cmd():
    """Inspect the Niemeier lattices and the stored tables."""


@catalog_cmd.command("list")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def catalog_list(as_json):
    specs = catalog.niemeier_specs()
    rows = []
    for label in catalog.NIEMEIER_LABELS:
        spec = specs[label]
        count = sum(catalog.root_count(k, n) for k, n in spec.components)
        rows.append({"label": label, "root_system": spec.root_system, "roots": count,
                     "table2": {f: catalog.table2_cell(label, f) for f in catalog.table2()["families"]
                                if catalog.table2_cell(label, f)}})
    fams = [{"family": fc.family, "frame_shape": {str(t): b for t, b in fc.frame_shape},
             "order": fc.order, "order_doubling": fc.order_doubling, "genus": fc.genus,
             "class_number": fc.class_number, "voa_count": fc.voa_count}
            for fc in catalog.frame_classes().values()]
    if as_json:
        click.echo(_dump({"lattices": rows, "frame_classes": fams}))
        return
    for r in rows:
        click.echo(f"{r['label']:>4}  {r['root_system']:<12} roots={r['roots']:<5} "
                   + " ".join(f"{f}:{','.join(map(str, v))}" for f, v in r["table2"].items()))


@catalog_cmd.command("info")
@click.argument("label")
@click.option("--json", "as_json", is_flag=True, help="Emit JSON.")
def catalog_info(label, as_json):
    L = catalog.build_niemeier(_label(label))
    names = catalog.identify_root_system(L)
    disc = discriminant_group(L)
    out = {"label": label, "rank": L.rank, "det": L.det,
           "even": all(L.gram[i][i] % 2 == 0 for i in range(L.rank)),
           "root_system": catalog.root_system_label(names), "roots": len(catalog.roots(L)),
           "discriminant": list(disc.elementary_divisors),
           "gram": [[str(x) for x in r] for r in L.gram]}
    if as_json:
        click.echo(_dump(out))
        return
    for k in ("label", "rank", "det", "even", "root_system", "roots", "discriminant"):
        click.echo(f"{k}: {out[k]}")


# ---------------------------------------------------------------------------
# analyze


def automorphism_from_spec(d: dict) -> tuple[LiftedAutomorphism, str | None]:
    """Validate an analysis spec {lattice, matrix?, h?, family?}."""
    if not isinstance(d, dict) or "lattice" not in d:
        raise InputError("spec needs a 'lattice' field")
    L = catalog.build_niemeier(_label(d["lattice"]))
    nu = _isometry(L, d["matrix"]) if "matrix" in d else identity_isometry(L)
    h = tuple(_parse_frac(x) for x in d.get("h", [0] * L.rank))
    if len(h) != L.rank:
        raise InputError("h has the wrong length")
    if tuple(nu.apply(h)) != h:
        raise InputError("h not fixed by the isometry")
    if not stabilizes_simple_roots(nu, catalog.simple_roots(L)):
        raise InputError("isometry does not stabilize the simple roots")
    family = d.get("family") or catalog.family_of_frame_shape(frame_shape(nu).exponents)
    return LiftedAutomorphism(standard_eta(nu), h), family


@main.command()
@click.argument("spec", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Emit the full JSON report.")
def analyze(spec, as_json):
    """Report the orbifold invariants of the automorphism described by SPEC."""
    g, family = automorphism_from_spec(_read_json(spec))
    out = report_to_dict(report(g, family))
    if as_json:
        click.echo(_dump(out))
        return
    for k in ("lattice", "frame_shape", "n", "type", "conformal_weights", "short",
              "orbifold_dim", "orbifold_rank", "schellekens_entry", "resolution"):
        click.echo(f"{k}: {out[k]}")


# ---------------------------------------------------------------------------
# search


def resolve_fixture(name: str) -> Fixture:
    if name == "identity":
        raise InputError("the identity fixture needs --lattice")
    p = Path(name)
    if not p.exists():
        p = fixture_dir() / (name if name.endswith(".json") else name + ".json")
    if not p.exists():
        raise InputError(f"fixture {name!r} not found")
    try:
        return load_fixture(p)
    except (ValueError, KeyError) as e:
        raise InputError(str(e)) from e


def search_to_dict(res: search_mod.SearchResult, fixture: Fixture) -> dict:
    out = {
        "lattice": res.lattice, "family": res.family, "frame_shape": res.frame_shape, "n": res.n,
        "fixture_hash": search_mod.fixture_hash(fixture),
        "candidates": res.candidates, "short_candidates": len(res.short),
        "count": res.count, "upper_bound": res.upper_bound, "status": res.status,
        "classes": [{"h": [frac_str(x) for x in c.h], "members": c.members,
                     "report": report_to_dict(c.report)} for c in res.classes],
    }
    fam = res.family
    if fam and catalog.table2_cell(res.lattice, fam):
        exp_count, exp_entries = search_mod.expected_cell(fam, res.lattice)
        found = sorted(c.report.resolved for c in res.classes if c.report.resolved is not None)
        single = len(catalog.table2_cell(res.lattice, fam)) == 1
        out["table2"] = {"expected_count": exp_count, "expected_entries": exp_entries,
                         "found_entries": found, "single_outer_class": single,
                         "match": (not single) or (res.count == exp_count and found == exp_entries)}
    return out


@main.command("search")
@click.option("--lattice", "label", required=True, help="Niemeier label, e.g. A3 or A24.")
@click.option("--fixture", "fixture_name", required=True,
              help="Fixture file, shipped fixture name, or 'identity'.")
@click.option("--dedup-gens", type=click.Path(), default=None,
              help="JSON list of normalizer matrices used to merge equivalent h.")
@click.option("--jobs", default=1, show_default=True, help="Worker processes.")
@click.option("--out", type=click.Path(), default=None, help="Also write the JSON results here.")
def search_cmd(label, fixture_name, dedup_gens, jobs, out):
    """Find the short automorphisms for a fixture isometry."""
    _label(label)
    fx = search_mod.identity_fixture(label) if fixture_name == "identity" else resolve_fixture(fixture_name)
    if fx.lattice_label != label:
        raise InputError(f"fixture is for {fx.lattice_label}, not {label}")
    gens = list(fx.centralizer)
    if dedup_gens:
        gens += [_isometry(fx.isometry.lattice, m) for m in _read_json(dedup_gens)]
    family = fx.family or catalog.family_of_frame_shape(frame_shape(fx.isometry).exponents)
    res = search_mod.find_short(fx.isometry, gens or None, family, jobs)
    data = search_to_dict(res, fx)
    text = _dump(data)
    if out:
        Path(out).write_text(text + "\n")
    click.echo(text)
    if not data.get("table2", {}).get("match", True):
        sys.exit(1)


# ---------------------------------------------------------------------------
# table


@main.group()
def table():
    """Compare searches with the stored tables."""


@table.command("reproduce")
@click.option("--family", required=True)
@click.option("--cells", multiple=True, help="Lattice labels (repeatable or comma separated).")
@click.option("--jobs", default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True)
def table_reproduce(family, cells, jobs, as_json):
    """Reproduce Table 2 cells of a family using the shipped fixtures."""
    if family not in catalog.table2()["families"]:
        raise InputError(f"unknown family {family!r}")
    labels = [c for arg in cells for c in arg.split(",") if c]
    for lab in labels:
        _label(lab)
    results = search_mod.reproduce_table(family, labels or None, jobs)
    rows = [{"family": r.family, "lattice": r.label, "status": r.status,
             "expected_count": r.expected_count, "found_count": r.found_count,
             "upper_bound": r.upper_bound, "expected_entries": r.expected_entries,
             "found_entries": r.found_entries, "search_status": r.search_status, "notes": r.notes}
            for r in results]
    if as_json:
        click.echo(_dump(rows))
    else:
        for r in rows:
            click.echo(f"{r['family']} {r['lattice']:>4} {r['status']:<7} expected={r['expected_count']} "
                       f"found={r['found_count']} entries={r['found_entries']} {' '.join(r['notes'])}")
        counts = {s: sum(r["status"] == s for r in rows) for s in ("pass", "fail", "skipped")}
        click.echo(f"{counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped")
    if any(r["status"] == "fail" for r in rows):
        sys.exit(1)


if __name__ == "__main__":
    main()
