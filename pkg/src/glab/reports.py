"""Machine- and human-readable reports for the command line.

Reports are plain dicts (JSON-ready) with a ``command`` discriminator;
``render_text`` lays them out as stable tables.  Every report echoes
the seed, the tolerances, and the package conventions verbatim, and is
deterministic for a fixed input and seed.
"""

from __future__ import annotations

from . import ideals as ideal_ops
from .algebra import BlockDecomposition
from .formats import Instance
from .groups import PartialAction
from .groupoids import from_partial_action
from .ideals import CONVENTIONS, VerificationReport


def fmt_element(el) -> str:
    if isinstance(el, tuple):
        return "(" + ",".join(fmt_element(x) for x in el) + ")"
    return str(el)


def fmt_set(items) -> list:
    return sorted(fmt_element(el) for el in items)


def _parameters(decomp: BlockDecomposition) -> dict:
    return {
        "seed": decomp.seed,
        "zero_eps": decomp.tol.zero_eps,
        "eig_residual": decomp.tol.eig_residual,
    }


def _instance_header(instance: Instance, source) -> dict:
    return {"source": str(source), "kind": instance.kind}


def freeness_table(action: PartialAction) -> list:
    """Per-point freeness of a partial action against the effectiveness
    of its transformation groupoid (the two sides computed separately)."""
    g = from_partial_action(action)
    e = action.group.identity
    rows = []
    for x in action.space:
        unit = (x, e, x)
        free = action.is_topologically_free_at(x)
        strong = action.is_strongly_topologically_free_at(x)
        effective = g.is_effective_at(unit)
        jointly = g.is_jointly_effective_at(unit)
        rows.append({
            "point": fmt_element(x),
            "topologically_free": free,
            "strongly_free": strong,
            "effective": effective,
            "jointly_effective": jointly,
            "agree": free == effective and strong == jointly,
        })
    return rows


def analyze_report(instance: Instance, source, decomp: BlockDecomposition,
                   max_blocks: int) -> dict:
    g = decomp.groupoid
    report = {
        "command": "analyze",
        "instance": {
            **_instance_header(instance, source),
            "name": g.name,
            "elements": len(g),
            "units": len(g.units),
            "orbits": len(g.orbits()),
            "block_dimensions": list(decomp.dimensions),
        },
        "parameters": _parameters(decomp),
        "conventions": list(CONVENTIONS),
        "numerics": dict(decomp.numerics),
    }
    ideals = decomp.all_ideals(max_blocks)
    rows = []
    for ideal in ideals:
        triple = ideal_ops.theta_inverse(ideal)
        rows.append({
            "blocks": sorted(ideal.blocks),
            "dimension": ideal.dimension,
            "dynamical": ideal.is_dynamical(),
            "purely_non_dynamical": ideal.is_purely_nondynamical(),
            "sandwich": {
                "lower": fmt_set(triple.lower),
                "upper": fmt_set(triple.upper),
            },
            "triple_quotient_blocks": sorted(triple.quotient_ideal.blocks),
        })
    obstruction = ideal_ops.obstruction_ideal(decomp)
    kernel = ideal_ops.collapse_kernel(decomp)
    report["counts"] = {
        "ideals": len(rows),
        "dynamical": sum(1 for r in rows if r["dynamical"]),
        "purely_non_dynamical": sum(1 for r in rows if r["purely_non_dynamical"]),
        "triples": len(rows),
    }
    report["ideals"] = rows
    report["obstruction_ideal"] = {
        "blocks": sorted(obstruction.blocks),
        "noneffective_units": fmt_set(g.units - g.effective_units()),
        "support_size": len(obstruction.support()),
    }
    report["collapse_kernel"] = {
        "blocks": sorted(kernel.blocks),
        "purely_non_dynamical": kernel.is_purely_nondynamical(),
        "support_matches_obstruction": kernel.support() == obstruction.support(),
    }
    if isinstance(instance.obj, PartialAction):
        report["freeness"] = freeness_table(instance.obj)
    return report


def verify_report(instance: Instance, source, result: VerificationReport,
                  theorem: str = "all") -> dict:
    body = result.to_dict()
    body["command"] = "verify"
    body["instance"].update(_instance_header(instance, source))
    body["theorem"] = theorem
    if theorem != "all":
        body["checks"] = [c for c in body["checks"] if c["name"] == theorem]
        body["all_passed"] = all(c["passed"] for c in body["checks"])
    return body


def graph_report(instance: Instance, source, cycle_cap: int = 50) -> dict:
    graph = instance.obj
    cycles = graph.simple_cycles()
    exitless = graph.exitless_cycle_vertices()
    lattice = graph.hereditary_saturated_sets()
    as_set = set(lattice)
    checked = lattice[:cycle_cap]
    law_failures = []
    for a in checked:
        for b in checked:
            if a & b not in as_set:
                law_failures.append(f"meet of {fmt_set(a)} and {fmt_set(b)} escapes")
            if graph.saturated_hereditary_closure(a | b) not in as_set:
                law_failures.append(f"join of {fmt_set(a)} and {fmt_set(b)} escapes")
    return {
        "command": "graph",
        "instance": {
            **_instance_header(instance, source),
            "vertices": len(graph.vertices),
            "edges": len(graph.edges),
        },
        "cycles": {
            "count": len(cycles),
            "listed": [[fmt_element(e.ident) for e in c] for c in cycles[:cycle_cap]],
            "with_exit": sum(1 for c in cycles if graph.cycle_has_exit(c)),
            "condition_L": graph.condition_L(),
            "exitless_cycle_vertices": fmt_set(exitless),
        },
        "obstruction_vertex_set": fmt_set(graph.obstruction_vertex_set()),
        "lattice": {
            "size": len(lattice),
            "sets": [fmt_set(s) for s in lattice[:cycle_cap]],
            "closure_laws_ok": not law_failures,
            "law_failures": law_failures[:5],
        },
        "conventions": list(CONVENTIONS),
    }


def dr_report(instance: Instance, source, member_cap: int = 64) -> dict:
    system = instance.obj
    periodic = system.periodic_points()
    loci = {}
    for p in range(1, len(system.space) + 1):
        locus = system.periodic_locus(p)
        loci[str(p)] = {
            "size": len(locus),
            "members": fmt_set(locus) if len(system.space) <= member_cap else None,
        }
    orbit_side = system.noneffective_locus()
    isotropy_side = system.eventually_periodic_locus()
    invariant = system.invariant_sets()
    return {
        "command": "dr",
        "instance": {
            **_instance_header(instance, source),
            "points": len(system.space),
        },
        "periodic_loci": loci,
        "periodic_points": {
            "size": len(periodic),
            "members": fmt_set(periodic) if len(system.space) <= member_cap else None,
        },
        "noneffective_locus": {
            "orbit_side_size": len(orbit_side),
            "eventually_periodic_size": len(isotropy_side),
            "agree": orbit_side == isotropy_side,
            "note": (
                "the whole space is the expected (degenerate) answer for a "
                "total map on a finite set; the content is the agreement of "
                "the two independently computed sides"
            ),
        },
        "invariant_sets": {
            "size": len(invariant),
            "sets": [fmt_set(s) for s in invariant[:member_cap]],
        },
        "conventions": list(CONVENTIONS),
    }


# -- text rendering -------------------------------------------------------------


def _kv_lines(title: str, mapping: dict) -> list:
    lines = [f"== {title} =="]
    width = max((len(k) for k in mapping), default=0)
    for k, v in mapping.items():
        lines.append(f"  {k:<{width}}  {v}")
    return lines


def _bool(v) -> str:
    return "yes" if v else "no"


def render_text(report: dict) -> str:
    command = report.get("command", "verify")
    lines = []
    inst = report.get("instance", {})
    lines += _kv_lines("instance", inst)
    if "parameters" in report:
        lines += _kv_lines("parameters", report["parameters"])
    if command == "analyze":
        lines += _kv_lines("counts", report["counts"])
        lines.append("== ideals ==")
        lines.append("  blocks          dim  dyn  pnd  U -> V")
        for row in report["ideals"]:
            blocks = ",".join(map(str, row["blocks"])) or "-"
            sandwich = f"{row['sandwich']['lower']} -> {row['sandwich']['upper']}"
            lines.append(
                f"  {blocks:<14}  {row['dimension']:>3}  {_bool(row['dynamical']):<3}"
                f"  {_bool(row['purely_non_dynamical']):<3}  {sandwich}"
            )
        lines += _kv_lines("obstruction ideal", report["obstruction_ideal"])
        lines += _kv_lines("collapse kernel", report["collapse_kernel"])
        if "freeness" in report:
            lines.append("== freeness (partial action vs groupoid) ==")
            for row in report["freeness"]:
                lines.append(
                    f"  {row['point']:<10} free={_bool(row['topologically_free'])}"
                    f" strong={_bool(row['strongly_free'])}"
                    f" effective={_bool(row['effective'])}"
                    f" jointly={_bool(row['jointly_effective'])}"
                    f" agree={_bool(row['agree'])}"
                )
    elif command == "verify":
        lines += _kv_lines("counts", report["counts"])
        lines.append("== checks ==")
        for c in report["checks"]:
            status = "pass" if c["passed"] else "FAIL"
            lines.append(f"  {c['name']:<12} {status}  {c['details']}")
            for w in c["witnesses"]:
                lines.append(f"      witness: {w}")
        lines.append(f"overall: {'pass' if report['all_passed'] else 'FAIL'}")
    elif command == "graph":
        lines += _kv_lines("cycles", {
            "count": report["cycles"]["count"],
            "with_exit": report["cycles"]["with_exit"],
            "condition_L": _bool(report["cycles"]["condition_L"]),
            "exitless_vertices": report["cycles"]["exitless_cycle_vertices"],
        })
        lines.append(f"obstruction vertex set: {report['obstruction_vertex_set']}")
        lines.append(
            f"saturated hereditary lattice ({report['lattice']['size']} sets, "
            f"closure laws {'ok' if report['lattice']['closure_laws_ok'] else 'FAIL'}):"
        )
        for s in report["lattice"]["sets"]:
            lines.append(f"  {s}")
    elif command == "dr":
        lines.append("== periodic loci ==")
        for p, locus in report["periodic_loci"].items():
            members = locus["members"]
            shown = " ".join(members) if members is not None else "(suppressed)"
            lines.append(f"  P_{p}: size {locus['size']}  {shown}")
        non = report["noneffective_locus"]
        lines += _kv_lines("noneffective locus", {
            "orbit side": non["orbit_side_size"],
            "eventually periodic side": non["eventually_periodic_size"],
            "agree": _bool(non["agree"]),
        })
        lines.append(f"  note: {non['note']}")
        lines.append(f"invariant sets: {report['invariant_sets']['size']}")
        for s in report["invariant_sets"]["sets"]:
            lines.append(f"  {s}")
    if "conventions" in report:
        lines.append("== conventions ==")
        for c in report["conventions"]:
            lines.append(f"  - {c}")
    return "\n".join(lines) + "\n"
