"""Verification suites, check execution and deterministic reports.

A report has two sections: ``payload`` holds everything that depends only on
the configuration and is byte-stable across runs, ``timings`` holds wall-clock
durations.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from ccrk.complex import VertexMap, euler_characteristic, is_isomorphism
from ccrk.errors import CCRKError
from ccrk.homology import reduced_betti_rational, reduced_homology
from ccrk.surfaces import (
    Status,
    as_tube,
    build_oracle_g,
    build_oracle_g2n1,
    counterexample_g,
    counterexample_g2n1,
    genus_rigid_set,
    intervals_compatible,
    sphere_rigid_set,
    sporadic_check,
    tau,
    theorem1_check,
    verify_rho,
)
from ccrk.tubings import associahedron_dual

SCHEMA = 1
SUITES = ("assoc-homology", "lemma-iso", "rho-degree", "theorem1", "counterexample", "sporadic")
N_CAP, G_CAP = 10, 4


class ConfigError(CCRKError, ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str = "all"
    n: tuple[int, ...] | None = None
    g: tuple[int, ...] | None = None
    m: tuple[int, ...] | None = None
    jobs: int = 1
    allow_large: bool = False

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from all, {', '.join(SUITES)}")
        if self.jobs < 1:
            raise ConfigError(f"--jobs must be >= 1, got {self.jobs}")
        if not self.allow_large:
            if self.n and max(self.n) > N_CAP:
                raise ConfigError(f"n <= {N_CAP} unless --allow-large is given")
            if self.m and max(self.m) > N_CAP - 1:
                raise ConfigError(f"m <= {N_CAP - 1} unless --allow-large is given")
            if self.g and max(self.g) > G_CAP:
                raise ConfigError(f"g <= {G_CAP} unless --allow-large is given")

    def suites(self) -> tuple[str, ...]:
        return SUITES if self.suite == "all" else (self.suite,)

    def to_json(self) -> dict:
        # jobs is left out: it never changes results
        return {
            "suite": self.suite,
            "n": list(self.n) if self.n is not None else None,
            "g": list(self.g) if self.g is not None else None,
            "m": list(self.m) if self.m is not None else None,
        }


def parse_range(text: str) -> tuple[int, ...]:
    """``"4..8"``, ``"5"`` or ``"4,6,8"`` as a sorted tuple of distinct ints."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..")
                lo, hi = int(lo), int(hi)
                if lo > hi:
                    raise ConfigError(f"empty range {part!r}")
                out.update(range(lo, hi + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise ConfigError(f"bad range {text!r}; use a..b, a or a,b,c") from None
    return tuple(sorted(out))


@dataclass
class CheckResult:
    check_id: str
    params: dict
    status: str
    witness: dict = field(default_factory=dict)
    discrepancy: str | None = None
    duration: float = 0.0

    def to_json(self) -> dict:
        out = {"id": self.check_id, "params": self.params, "status": self.status, "witness": self.witness}
        if self.discrepancy is not None:
            out["discrepancy"] = self.discrepancy
        return out


# -- individual checks ----------------------------------------------------------
# Each returns (ok, witness, discrepancy) and may raise CCRKError.


def _catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def check_assoc_homology(m: int):
    D = associahedron_dual(m)
    h = reduced_homology(D)
    chi = euler_characteristic(D)
    d = m - 3
    sizes = sorted({len(f) for f in D.facets})
    witness = {
        "f_vector": list(D.f_vector()),
        "facets": len(D.facets),
        "catalan": _catalan(m - 1),
        "facet_sizes": sizes,
        "homology": [g.to_json() for g in h.nonzero()],
        "euler": chi,
    }
    problems = []
    if not h.is_sphere(d):
        problems.append(f"homology is not Z in dim {d}")
    if reduced_betti_rational(D) != h.betti():
        problems.append("rational Betti numbers disagree with the integer computation")
    if chi != 1 + (-1) ** d:
        problems.append(f"euler characteristic {chi}, sphere expects {1 + (-1) ** d}")
    if len(D.facets) != _catalan(m - 1):
        problems.append(f"{len(D.facets)} facets, Catalan number is {_catalan(m - 1)}")
    if sizes != [m - 2]:
        problems.append(f"facet sizes {sizes}, expected [{m - 2}]")
    return not problems, witness, "; ".join(problems) or None


def _interval_iso(X, m: int):
    D = associahedron_dual(m)
    f = VertexMap(X, D, {J: as_tube(J) for J in X.vertices})
    inv = VertexMap(D, X, {as_tube(J): J for J in X.vertices})
    forward, backward = is_isomorphism(f), is_isomorphism(inv)
    h = reduced_homology(X)
    witness = {
        "target": f"D_{m}",
        "vertices": X.n_vertices,
        "forward_iso": forward,
        "inverse_iso": backward,
        "homology": [g.to_json() for g in h.nonzero()],
    }
    return forward and backward, witness, h


def check_lemma_iso_n(n: int):
    ok, witness, h = _interval_iso(sphere_rigid_set(n), n - 1)
    witness["tau"] = tau(0, n)
    sphere = h.is_sphere(tau(0, n))
    ok = ok and sphere
    msg = None if ok else f"isomorphism {witness['forward_iso']}/{witness['inverse_iso']}, sphere {sphere}"
    return ok, witness, msg


def check_lemma_iso_g(g: int):
    ok, witness, h = _interval_iso(genus_rigid_set(g), 2 * g + 1)
    witness["tau"] = tau(g, 0)
    sphere = h.is_sphere(2 * g - 2) and tau(g, 0) == 2 * g - 2
    ok = ok and sphere
    msg = None if ok else f"isomorphism {witness['forward_iso']}/{witness['inverse_iso']}, sphere {sphere}"
    return ok, witness, msg


def check_rho(N: int):
    r = verify_rho(N)
    witness = r.to_json()
    witness["degree"] = r.degree
    return r.ok(), witness, None if r.ok() else f"rho report {witness}"


def check_rho_genus(g: int):
    # the genus complex is literally the interval complex over 2g, so rho is the same map
    if genus_rigid_set(g) != sphere_rigid_set(2 * g + 2):
        return False, {}, "genus and sphere interval complexes differ"
    return check_rho(2 * g)


def check_theorem1(n: int):
    r = theorem1_check(n)
    ok = r.vertex_count == r.expected_count
    return ok, r.to_json(), None if ok else f"{r.vertex_count} vertices, expected {r.expected_count}"


def _oracle_summary(oracle, N: int) -> tuple[dict, list[str]]:
    counts = {s.value: 0 for s in Status}
    problems = []
    for a, b, st, prov in oracle.known_pairs():
        counts[st.value] += 1
        if prov == "rule":
            want = Status.DISJOINT if intervals_compatible(a, b, N) else Status.INTERSECTING
            if st is not want:
                problems.append(f"rule status of ({a}, {b}) disagrees with tube compatibility")
    total = len(oracle.universe) * (len(oracle.universe) - 1) // 2
    counts["unknown"] = total - counts["disjoint"] - counts["intersecting"]
    return counts, problems


def check_counterexample(g: int):
    w = counterexample_g(g)
    counts, problems = _oracle_summary(build_oracle_g(g), 2 * g)
    witness = w.to_json()
    witness["oracle_pairs"] = counts
    return not problems, witness, "; ".join(problems) or None


def check_counterexample_g2n1():
    w = counterexample_g2n1()
    counts, problems = _oracle_summary(build_oracle_g2n1(), 4)
    witness = w.to_json()
    witness["oracle_pairs"] = counts
    return not problems, witness, "; ".join(problems) or None


def check_sporadic():
    rep = sporadic_check()
    bad = [k for k, v in rep.items() if isinstance(v, dict) and not v["zero_sphere"]]
    return not bad, rep, f"not 0-spheres: {bad}" if bad else None


CHECKS = {
    "assoc-homology": check_assoc_homology,
    "lemma-iso-n": check_lemma_iso_n,
    "lemma-iso-g": check_lemma_iso_g,
    "rho-degree-n": check_rho,
    "rho-degree-g": check_rho_genus,
    "theorem1": check_theorem1,
    "counterexample": check_counterexample,
    "counterexample-g2n1": check_counterexample_g2n1,
    "sporadic": check_sporadic,
}


# -- planning ---------------------------------------------------------------------

DEFAULTS = {
    "assoc-homology": {"m": range(3, 10)},
    "lemma-iso": {"n": range(4, 10), "g": range(1, 5)},
    "rho-degree": {"n": range(4, 10), "g": range(1, 4)},
    "theorem1": {"n": range(5, 10)},
    "counterexample": {"g": range(3, 5)},
}
MINIMA = {
    ("assoc-homology", "m"): 3,
    ("lemma-iso", "n"): 4,
    ("lemma-iso", "g"): 1,
    ("rho-degree", "n"): 4,
    ("rho-degree", "g"): 1,
    ("theorem1", "n"): 5,
    ("counterexample", "g"): 3,
}


@dataclass(frozen=True)
class PlannedCheck:
    check_id: str
    kind: str
    args: tuple
    params: dict


def _values(cfg: SuiteConfig, suite: str, key: str) -> list[int]:
    given = getattr(cfg, key)
    vals = given if given is not None else DEFAULTS[suite][key]
    return [v for v in vals if v >= MINIMA[(suite, key)]]


def plan(cfg: SuiteConfig) -> list[PlannedCheck]:
    out = []
    for suite in cfg.suites():
        if suite == "assoc-homology":
            for m in _values(cfg, suite, "m"):
                out.append(PlannedCheck(f"assoc-homology/m={m:02d}", suite, (m,), {"m": m}))
        elif suite == "lemma-iso":
            for n in _values(cfg, suite, "n"):
                out.append(PlannedCheck(f"lemma-iso/n={n:02d}", "lemma-iso-n", (n,), {"n": n}))
            for g in _values(cfg, suite, "g"):
                out.append(PlannedCheck(f"lemma-iso/g={g:02d}", "lemma-iso-g", (g,), {"g": g}))
        elif suite == "rho-degree":
            for n in _values(cfg, suite, "n"):
                out.append(PlannedCheck(f"rho-degree/n={n:02d}", "rho-degree-n", (n - 2,), {"n": n, "N": n - 2}))
            for g in _values(cfg, suite, "g"):
                out.append(PlannedCheck(f"rho-degree/g={g:02d}", "rho-degree-g", (g,), {"g": g, "N": 2 * g}))
        elif suite == "theorem1":
            for n in _values(cfg, suite, "n"):
                out.append(PlannedCheck(f"theorem1/n={n:02d}", suite, (n,), {"n": n}))
        elif suite == "counterexample":
            for g in _values(cfg, suite, "g"):
                out.append(PlannedCheck(f"counterexample/g={g:02d}", suite, (g,), {"g": g}))
            out.append(PlannedCheck("counterexample/g=02,n=1", "counterexample-g2n1", (), {"g": 2, "n": 1}))
        elif suite == "sporadic":
            out.append(PlannedCheck("sporadic", suite, (), {}))
    return sorted(out, key=lambda c: c.check_id)


def run_check(pc: PlannedCheck) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, witness, msg = CHECKS[pc.kind](*pc.args)
        status = "pass" if ok else "fail"
    except CCRKError as exc:
        witness, msg, status = {}, f"{type(exc).__name__}: {exc}", "fail"
    return CheckResult(pc.check_id, pc.params, status, witness, msg, time.perf_counter() - t0)


def run_suite(cfg: SuiteConfig) -> list[CheckResult]:
    planned = plan(cfg)
    if cfg.jobs == 1 or len(planned) < 2:
        results = [run_check(pc) for pc in planned]
    else:
        with ProcessPoolExecutor(max_workers=min(cfg.jobs, len(planned))) as pool:
            results = list(pool.map(run_check, planned))
    return sorted(results, key=lambda r: r.check_id)


def build_report(cfg: SuiteConfig, results: list[CheckResult]) -> dict:
    counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skipped")}
    payload = {
        "config": cfg.to_json(),
        "checks": [r.to_json() for r in results],
        "summary": counts,
    }
    timings = {r.check_id: round(r.duration, 4) for r in results}
    timings["total"] = round(sum(r.duration for r in results), 4)
    return {"schema": SCHEMA, "payload": payload, "timings": timings}


def payload_bytes(report: dict) -> bytes:
    return json.dumps(report["payload"], sort_keys=True, separators=(",", ":")).encode()


def dumps_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def dumps_text(report: dict) -> str:
    lines = []
    for c in report["payload"]["checks"]:
        line = f"{c['status'].upper():4s} {c['id']}"
        if c.get("discrepancy"):
            line += f"  -- {c['discrepancy']}"
        lines.append(line)
    s = report["payload"]["summary"]
    lines.append(f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


def default_jobs() -> int:
    raw = os.environ.get("CCRK_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError(f"CCRK_JOBS must be an integer, got {raw!r}") from None
    if jobs < 1:
        raise ConfigError(f"CCRK_JOBS must be >= 1, got {jobs}")
    return jobs
