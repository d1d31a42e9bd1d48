"""Seeded experiment sweeps with crash-safe CSV emission.

A sweep is (mode, n values, trials); each (n, trial) cell generates a graph,
colors it, verifies sampled pairs, and appends one CSV row carrying every
derived parameter so runs are auditable without rerunning.  Rows flush as
they are written; a crashed sweep leaves a readable prefix.  Identical
configs produce byte-identical files: elapsed times are written as NA unless
timing is requested, and all floats go through fixed formats.

Modes
  thm1           G(n, p) at the connectivity threshold, pendant-first
                 coloring, sampled-pair search verification.
  regular        random r-regular via the configuration model, greedy
                 power coloring; r = 3 additionally rewrites cycle classes;
                 pairs try the tree-witness construction first (r >= 4) and
                 fall back to search.
  brute          exact rc on small instances against the max(Z1, diameter)
                 lower bound.
  lemcol_stress  matched path pairing on synthetic rainbow tree pairs,
                 counting pairs and guarantee violations.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union

from .coloring import (color_greedy_power, color_threshold, recolor_cycle_classes,
                       regular_params, threshold_params)
from .errors import GenerationExhausted, GuaranteeViolation, PaletteExhausted
from .graphs import GenParams, connected, degree_stats, diameter, gen_gnp, gen_regular_config
from .pairing import build_tree_pair_graph, pair_tree_paths, pair_tree_paths_binary, \
    random_rainbow_tree_coloring, witness_via_trees
from .rng import derive_seed, stream
from .verify import brute_force_rc, rainbow_path_search

__all__ = [
    "SCHEMA",
    "CSV_HEADER",
    "ExperimentConfig",
    "ExperimentRecord",
    "load_config",
    "config_from_mapping",
    "run_experiment",
    "summarize",
]

SCHEMA = "rainbowconn-exp-1"

CSV_HEADER = (
    "schema", "mode", "trial", "seed", "n", "m", "p", "omega", "r", "d", "ell",
    "epsilon", "L", "k", "gamma", "q", "p0", "theta_r", "sigma", "Q", "z1",
    "diameter", "diameter_mode", "rc", "rc_lower_bound", "pairs_tried",
    "pairs_connected", "success_rate", "mean_witness_len", "fresh_colors",
    "cycle_classes", "flags", "elapsed_s",
)

_MODES = ("thm1", "regular", "brute", "lemcol_stress")


@dataclass
class ExperimentConfig:
    mode: str
    n_values: tuple[int, ...] = ()
    p: Optional[float] = None
    omega: Optional[float] = None
    r: Optional[int] = None
    d: Optional[int] = None
    ell: Optional[int] = None
    epsilon: Optional[float] = None
    trials: int = 1
    sampled_pairs: int = 50
    budget: int = 10 ** 6
    q_max: Optional[int] = None
    seed: int = 0
    out: str = "experiment.csv"
    timing: bool = False

    def validate(self) -> None:
        if self.mode not in _MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {_MODES}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.mode == "lemcol_stress":
            if self.d is None or self.ell is None:
                raise ValueError("lemcol_stress needs d and ell")
            if self.d < 2 or self.ell < 1:
                raise ValueError("lemcol_stress needs d >= 2 and ell >= 1")
            return
        if not self.n_values:
            raise ValueError(f"mode {self.mode} needs n values")
        if self.mode == "regular":
            if self.r is None:
                raise ValueError("regular mode needs r")
        else:
            if (self.p is None) == (self.omega is None):
                raise ValueError(f"mode {self.mode} needs exactly one of p, omega")
        if self.sampled_pairs < 1 and self.mode in ("thm1", "regular"):
            raise ValueError("sampled_pairs must be >= 1")


@dataclass
class ExperimentRecord:
    """One CSV row; every field lands in the fixed header order."""

    mode: str
    trial: int
    seed: int
    n: Optional[int] = None
    m: Optional[int] = None
    p: Optional[float] = None
    omega: Optional[float] = None
    r: Optional[int] = None
    d: Optional[int] = None
    ell: Optional[int] = None
    epsilon: Optional[float] = None
    L: Optional[float] = None
    k: Optional[int] = None
    gamma: Optional[int] = None
    q: Optional[int] = None
    p0: Optional[float] = None
    theta_r: Optional[float] = None
    sigma: Optional[int] = None
    Q: Optional[int] = None
    z1: Optional[int] = None
    diameter: Optional[int] = None
    diameter_mode: Optional[str] = None
    rc: Optional[int] = None
    rc_lower_bound: Optional[int] = None
    pairs_tried: Optional[int] = None
    pairs_connected: Optional[int] = None
    success_rate: Optional[float] = None
    mean_witness_len: Optional[float] = None
    fresh_colors: Optional[int] = None
    cycle_classes: Optional[int] = None
    flags: list[str] = field(default_factory=list)
    elapsed_s: Optional[float] = None

    def row(self, include_timing: bool) -> list[str]:
        vals = {
            "schema": SCHEMA, "mode": self.mode, "trial": self.trial, "seed": self.seed,
            "n": self.n, "m": self.m, "p": _f6(self.p), "omega": _f6(self.omega),
            "r": self.r, "d": self.d, "ell": self.ell, "epsilon": _f6(self.epsilon),
            "L": _f6(self.L), "k": self.k, "gamma": self.gamma, "q": self.q,
            "p0": _f6(self.p0), "theta_r": _f6(self.theta_r), "sigma": self.sigma,
            "Q": self.Q, "z1": self.z1, "diameter": self.diameter,
            "diameter_mode": self.diameter_mode, "rc": self.rc,
            "rc_lower_bound": self.rc_lower_bound, "pairs_tried": self.pairs_tried,
            "pairs_connected": self.pairs_connected,
            "success_rate": None if self.success_rate is None else f"{self.success_rate:.4f}",
            "mean_witness_len": None if self.mean_witness_len is None else f"{self.mean_witness_len:.3f}",
            "fresh_colors": self.fresh_colors, "cycle_classes": self.cycle_classes,
            "flags": ";".join(self.flags),
            "elapsed_s": f"{self.elapsed_s:.3f}" if include_timing and self.elapsed_s is not None else "NA",
        }
        out = []
        for col in CSV_HEADER:
            v = vals[col]
            if v is None:
                v = "NA"
            out.append(str(v))
        return out


def _f6(x: Optional[float]) -> Optional[str]:
    return None if x is None else f"{x:.6g}"


# ----------------------------------------------------------------------------
# config files: flat key=value, # comments, flags override
# ----------------------------------------------------------------------------

def load_config(path: Union[str, Path]) -> dict[str, str]:
    out: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
        key, _, val = line.partition("=")
        out[key.strip()] = val.strip()
    return out


def config_from_mapping(mapping: dict[str, str]) -> ExperimentConfig:
    known = {
        "mode": str, "n_values": None, "p": float, "omega": float, "r": int,
        "d": int, "ell": int, "epsilon": float, "trials": int,
        "sampled_pairs": int, "budget": int, "q_max": int, "seed": int,
        "out": str, "timing": None,
    }
    kwargs = {}
    for key, raw in mapping.items():
        if key not in known:
            raise ValueError(f"unknown config key {key!r}")
        if key == "n_values":
            kwargs[key] = tuple(int(tok) for tok in str(raw).replace(",", " ").split())
        elif key == "timing":
            kwargs[key] = str(raw).lower() in ("1", "true", "yes", "on")
        elif raw is None:
            continue
        else:
            kwargs[key] = known[key](raw)
    if "mode" not in kwargs:
        raise ValueError("config is missing mode")
    cfg = ExperimentConfig(**kwargs)
    cfg.validate()
    return cfg


# ----------------------------------------------------------------------------
# per-mode trial bodies
# ----------------------------------------------------------------------------

def _trial_thm1(cfg: ExperimentConfig, n: int, trial: int, tseed: int) -> ExperimentRecord:
    rec = ExperimentRecord(mode="thm1", trial=trial, seed=tseed, n=n,
                           p=cfg.p, omega=cfg.omega)
    g = gen_gnp(GenParams(n=n, p=cfg.p, omega=cfg.omega, seed=tseed))
    rec.m = g.m
    rec.p = g.meta["p"]
    if g.meta.get("p_clamped"):
        rec.flags.append("p_clamped")
    tp = threshold_params(n, cfg.epsilon)
    rec.epsilon, rec.L, rec.k = tp.epsilon, tp.L, tp.k
    rec.gamma, rec.q, rec.p0 = tp.gamma, tp.q, tp.p0
    rec.flags.extend(f"clamped:{name}" for name in tp.clamped)
    st = degree_stats(g)
    rec.z1 = st.z1
    rec.diameter = diameter(g, mode="double_sweep")
    rec.diameter_mode = "double_sweep"
    if not connected(g):
        rec.flags.append("disconnected")
        return rec
    rec.rc_lower_bound = max(rec.z1, rec.diameter) if rec.diameter else rec.z1
    c = color_threshold(g, tp, seed=derive_seed(tseed, "color"))
    rec.Q = c.palette_size
    rec.flags.extend(c.flags)
    rep = _search_pairs(g, c, cfg.sampled_pairs, tseed, cfg.budget)
    rec.pairs_tried, rec.pairs_connected, rec.mean_witness_len = rep
    rec.success_rate = rec.pairs_connected / rec.pairs_tried if rec.pairs_tried else None
    return rec


def _trial_regular(cfg: ExperimentConfig, n: int, trial: int, tseed: int) -> ExperimentRecord:
    r = cfg.r
    rec = ExperimentRecord(mode="regular", trial=trial, seed=tseed, n=n, r=r)
    try:
        g = gen_regular_config(GenParams(n=n, p=None, omega=None, r=r, seed=tseed))
    except GenerationExhausted:
        rec.flags.append("generation_exhausted")
        return rec
    rec.m = g.m
    rp = regular_params(n, r, cfg.epsilon if cfg.epsilon is not None else 0.1)
    rec.epsilon, rec.k, rec.gamma = rp.epsilon, rp.k, rp.gamma
    rec.q, rec.theta_r, rec.sigma = rp.q, rp.theta_r, rp.sigma
    rec.flags.extend(f"clamped:{name}" for name in rp.clamped)
    st = degree_stats(g)
    rec.z1 = st.z1
    rec.diameter = diameter(g, mode="double_sweep")
    rec.diameter_mode = "double_sweep"
    try:
        c = color_greedy_power(g, radius=2 * rp.k, q=rp.q,
                               seed=derive_seed(tseed, "color"))
    except PaletteExhausted:
        rec.flags.append("palette_exhausted")
        return rec
    if r == 3:
        c, classes = recolor_cycle_classes(g, c, rp.k)
        rec.fresh_colors = c.palette_size - rp.q
        rec.cycle_classes = len(classes)
        rec.flags.extend(c.flags)
    rec.Q = c.palette_size
    d = r - 2
    rec.d = d if d >= 2 else None
    pairs = _sample_pairs(g.n, cfg.sampled_pairs, tseed)
    tried = won = via_tree = 0
    lens: list[int] = []
    for u, v in pairs:
        tried += 1
        w = None
        if d >= 2:
            w = witness_via_trees(g, c, u, v, k=rp.k, gamma=rp.gamma, d=d)
        if w is not None:
            via_tree += 1
        else:
            w = rainbow_path_search(g, c, u, v, budget=cfg.budget,
                                    seed=derive_seed(tseed, f"pair:{u}:{v}"))
        if w is not None:
            won += 1
            lens.append(w.length)
    rec.pairs_tried, rec.pairs_connected = tried, won
    rec.success_rate = won / tried if tried else None
    rec.mean_witness_len = statistics.fmean(lens) if lens else None
    rec.flags.append(f"tree_witness:{via_tree}")
    return rec


def _trial_brute(cfg: ExperimentConfig, n: int, trial: int, tseed: int) -> ExperimentRecord:
    rec = ExperimentRecord(mode="brute", trial=trial, seed=tseed, n=n,
                           p=cfg.p, omega=cfg.omega)
    g = None
    for attempt in range(200):
        cand = gen_gnp(GenParams(n=n, p=cfg.p, omega=cfg.omega,
                                 seed=derive_seed(tseed, "gen", attempt)))
        if connected(cand):
            g = cand
            if attempt:
                rec.flags.append(f"regen:{attempt}")
            break
    if g is None:
        rec.flags.append("no_connected_instance")
        return rec
    rec.m = g.m
    rec.p = g.meta["p"]
    st = degree_stats(g)
    rec.z1 = st.z1
    rec.diameter = diameter(g, mode="exact")
    rec.diameter_mode = "exact"
    rec.rc_lower_bound = max(rec.z1, rec.diameter)
    res = brute_force_rc(g, q_max=cfg.q_max)
    if res is None:
        rec.flags.append("unresolved")
    else:
        rec.rc = res[0]
        rec.Q = res[1].palette_size
    return rec


def _trial_lemcol(cfg: ExperimentConfig, trial: int, tseed: int) -> ExperimentRecord:
    d, ell = cfg.d, cfg.ell
    rec = ExperimentRecord(mode="lemcol_stress", trial=trial, seed=tseed, d=d, ell=ell)
    g, t1, t2 = build_tree_pair_graph(d, ell)
    rec.n, rec.m = g.n, g.m
    palette = 2 * (g.m // 2)
    c = random_rainbow_tree_coloring(g, t1, t2, palette=palette, seed=tseed)
    rec.Q = palette
    floor = 2 ** (ell // 2) if d == 2 else (d - 1) ** ell
    rec.sigma = floor
    try:
        if d == 2:
            res = pair_tree_paths_binary(t1, t2, c)
        else:
            res = pair_tree_paths(t1, t2, c, d)
    except GuaranteeViolation:
        rec.flags.append("guarantee_violation")
        rec.pairs_tried = 0
        rec.pairs_connected = 0
        rec.success_rate = 0.0
        return rec
    rec.pairs_tried = len(res.pairs)
    rec.pairs_connected = len(res.pairs)
    rec.success_rate = 1.0
    rec.mean_witness_len = float(2 * ell)
    return rec


def _sample_pairs(n: int, count: int, seed: int) -> list[tuple[int, int]]:
    rng = stream(seed, "sample-pairs")
    total = n * (n - 1) // 2
    count = min(count, total)
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < count:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            chosen.add((min(u, v), max(u, v)))
    return sorted(chosen)


def _search_pairs(g, c, count: int, seed: int, budget: int):
    tried = won = 0
    lens: list[int] = []
    for u, v in _sample_pairs(g.n, count, seed):
        tried += 1
        w = rainbow_path_search(g, c, u, v, budget=budget,
                                seed=derive_seed(seed, f"pair:{u}:{v}"))
        if w is not None:
            won += 1
            lens.append(w.length)
    return tried, won, (statistics.fmean(lens) if lens else None)


# ----------------------------------------------------------------------------
# sweep driver
# ----------------------------------------------------------------------------

def run_experiment(cfg: ExperimentConfig) -> tuple[list[ExperimentRecord], str]:
    """Run the sweep, appending one flushed CSV row per (n, trial) cell.

    Returns the records plus a printable summary.  Domain-level failures
    (generation exhausted, palette exhausted, disconnected instance) become
    row flags; only I/O errors propagate.
    """
    cfg.validate()
    records: list[ExperimentRecord] = []
    cells: list[Optional[int]]
    if cfg.mode == "lemcol_stress":
        cells = [None]
    else:
        cells = list(cfg.n_values)
    out_path = Path(cfg.out)
    with open(out_path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        fh.flush()
        for n in cells:
            for trial in range(cfg.trials):
                tag = f"{cfg.mode}:{n if n is not None else cfg.d}"
                tseed = derive_seed(cfg.seed, tag, trial)
                t0 = time.perf_counter()
                if cfg.mode == "thm1":
                    rec = _trial_thm1(cfg, n, trial, tseed)
                elif cfg.mode == "regular":
                    rec = _trial_regular(cfg, n, trial, tseed)
                elif cfg.mode == "brute":
                    rec = _trial_brute(cfg, n, trial, tseed)
                else:
                    rec = _trial_lemcol(cfg, trial, tseed)
                rec.elapsed_s = time.perf_counter() - t0
                records.append(rec)
                writer.writerow(rec.row(cfg.timing))
                fh.flush()
    return records, summarize(records)


def summarize(records: Sequence[ExperimentRecord]) -> str:
    lines = [f"{len(records)} rows"]
    rates = sorted(r.success_rate for r in records if r.success_rate is not None)
    if rates:
        if len(rates) >= 4:
            qs = statistics.quantiles(rates, n=4)
            lines.append("success rate min/q1/med/q3/max = "
                         f"{rates[0]:.4f}/{qs[0]:.4f}/{qs[1]:.4f}/{qs[2]:.4f}/{rates[-1]:.4f}")
        else:
            lines.append("success rates = " + "/".join(f"{r:.4f}" for r in rates))
    rcs = [(r.rc, r.rc_lower_bound) for r in records if r.rc is not None]
    if rcs:
        tight = sum(1 for rc, lb in rcs if rc == lb)
        lines.append(f"rc equals lower bound on {tight}/{len(rcs)} solved instances")
    flag_counts: dict[str, int] = {}
    for r in records:
        for fl in r.flags:
            key = fl.split(":")[0]
            flag_counts[key] = flag_counts.get(key, 0) + 1
    if flag_counts:
        lines.append("flags: " + ", ".join(f"{k}={v}" for k, v in sorted(flag_counts.items())))
    return "\n".join(lines)
