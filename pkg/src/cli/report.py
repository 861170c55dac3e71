"""
Run Report Module

Assembles the machine-readable output of `run`: the CloudSpec it ran on,
the distance table, radial profile, simplex lists, Betti profiles and
audits. JSON is canonical; CSV carries only the distance table and the
Betti curves.
"""

import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from src.common.config import log
from src.common.types import BKParams, ComplexKind
from src.complexes.simplicial import default_max_dim
from src.homology.betti import betti_sweep, build_complex
from src.metric.wedge import cloud_metric
from src.models.counterexample import scalar_counterexample_scenario
from src.models.cp_models import bures_ray, bures_scalar, ksw_bounds, ksw_check
from src.wedge.audits import attachment_audit, decomposition_audit
from src.wedge.radial import radial_profile
from src.cli.cloud_spec import CloudSpec
from src.cli.scenarios import ScenarioId, ScenarioOptions


def run_document(
    spec: CloudSpec,
    t_grid: Sequence[float],
    kinds: Sequence[ComplexKind],
    max_dim: Optional[int] = None,
    audit: bool = False,
    scenario: Optional[str] = None,
) -> Dict[str, Any]:
    """Everything `run` reports for one cloud, ordered by complex kind then t"""
    cloud = spec.build()
    metric = cloud_metric(cloud)
    labels = list(metric.labels)
    max_dim = default_max_dim(metric.n) if max_dim is None else max_dim
    grid = sorted(set(float(t) for t in t_grid))
    c_binding, y_binding = spec.bindings()

    complexes: List[dict] = []
    profiles: List[dict] = []
    for kind in kinds:
        for t in grid:
            cx = build_complex(cloud, t, kind, max_dim, c_binding=c_binding, y_binding=y_binding)
            complexes.append({"complex": kind.value, "t": t, **cx.to_json(labels)})
        profile = betti_sweep(cloud, grid, kind, max_dim, c_binding=c_binding, y_binding=y_binding)
        profiles.append(profile.to_json())

    doc: Dict[str, Any] = {
        "scenario": scenario,
        "cloudSpec": spec.to_json(),
        "labels": labels,
        "distanceTable": metric.dist.tolist(),
        "radialProfile": radial_profile(cloud).to_json(),
        "complexes": complexes,
        "betti": profiles,
    }

    if audit:
        report = decomposition_audit(cloud, grid, max_dim, c_binding, y_binding,
                                     check_cech=ComplexKind.CECH_AMBIENT in kinds)
        attachment = []
        if cloud.y_vertices():
            for x in range(cloud.n_c):
                lower, upper = attachment_audit(cloud, x)
                attachment.append({"x": x, "rC": lower, "distToY": upper})
        doc["audit"] = {"passed": report.passed, "decomposition": report.to_json(), "attachment": attachment}

    warnings = spec.radius_warnings()
    if warnings:
        doc["warnings"] = [w.describe() for w in warnings]
    return doc


def anchor_separation_document(options: ScenarioOptions) -> Dict[str, Any]:
    report = scalar_counterexample_scenario(1.0, options.n_max, 4.0, params=BKParams(p=options.p))
    return {"scenario": ScenarioId.ANCHOR_SEPARATION.value, "report": report.model_dump(mode="json"),
            "holds": report.holds}


def ksw_document(points: int = 20, upper: float = 5.0) -> Dict[str, Any]:
    """KSW lower/upper bounds against the exact scalar and ray distances"""
    rows = []
    grid = np.linspace(0.0, upper, points)
    for c in grid:
        for d in grid:
            lower, up = ksw_bounds(abs(c - d), c, d)
            rows.append({
                "c": float(c), "d": float(d), "cbDiff": float(abs(c - d)),
                "betaScalar": bures_scalar(c, d), "betaRay": bures_ray(c, d),
                "lower": lower, "upper": up,
                "holds": bool(ksw_check(bures_scalar(c, d), abs(c - d), c, d) and ksw_check(bures_ray(c, d), abs(c - d), c, d)),
            })
    return {"scenario": ScenarioId.KSW_SCALAR.value, "grid": rows, "holds": all(r["holds"] for r in rows)}


# =============================================================================
# EMISSION
# =============================================================================

def to_json_text(doc: Dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def to_csv_text(doc: Dict[str, Any]) -> str:
    """Distance table block, a blank line, then one Betti-curve row per (complex, t)"""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if "distanceTable" in doc:
        labels = doc["labels"]
        writer.writerow([""] + labels)
        for label, row in zip(labels, doc["distanceTable"]):
            writer.writerow([label] + [repr(float(v)) for v in row])
        writer.writerow([])
        width = max((len(s["betti"]) for p in doc["betti"] for s in p["perScale"]), default=0)
        writer.writerow(["complex", "t"] + [f"beta{k}" for k in range(width)] + ["euler", "contractible"])
        for profile in doc["betti"]:
            for s in profile["perScale"]:
                writer.writerow([profile["complex"], s["t"]] + s["betti"] + [s["euler"], s["contractible"]])
    elif "grid" in doc:
        writer.writerow(["c", "d", "cbDiff", "betaScalar", "betaRay", "lower", "upper", "holds"])
        for r in doc["grid"]:
            writer.writerow([r["c"], r["d"], r["cbDiff"], r["betaScalar"], r["betaRay"],
                             "" if r["lower"] is None else r["lower"], r["upper"], r["holds"]])
    else:
        rows = doc["report"]["rows"]
        if rows:
            writer.writerow(list(rows[0].keys()))
            for r in rows:
                writer.writerow(list(r.values()))
    return buf.getvalue()


def emit(doc: Dict[str, Any], fmt: str = "json", out: Optional[str] = None) -> str:
    text = to_json_text(doc) if fmt == "json" else to_csv_text(doc)
    if out:
        with open(out, "w", encoding="utf-8", newline="") as f:
            f.write(text if text.endswith("\n") else text + "\n")
        log("Report", f"wrote {fmt} to {out}")
    return text
