"""Command-line surface: eval | meanvalue | laplace | lemmas | verify.

Each subcommand reads one flat key-value config file, writes one CSV with
a fixed schema plus a JSON run manifest, and exits 0 on success, 2 when
verification fails, 1 on operational errors.  Floats are serialized with
repr, the shortest decimal that round-trips binary64, so re-parsing and
re-emitting a file reproduces it byte for byte.

Work is distributed over a thread pool per grid row, but rows are always
emitted in configuration order and every file is written by the main
thread, so the thread budget never changes output bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__, acceptance, bound_checks, laplace, mean_value, predictors
from .aux_eval import (DIRECT_CONTOUR_METHOD, MAIN_SUM_METHOD, eval_aux,
                       eval_aux_direct, main_sum, main_sum_error_bound,
                       n_main_terms)
from .cache import CacheRecord, EvalCache
from .config import RunConfig, config_to_dict, load_config
from .errors import AuxZetaError

TWO_PI = 2.0 * math.pi


@dataclass
class RunContext:
    config: RunConfig
    out_dir: str
    threads: int
    cache: EvalCache | None


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _write_csv(path: str, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _write_manifest(ctx: RunContext, command: str, wall: float,
                    n_evals: int) -> None:
    import mpmath

    manifest = {
        "command": command,
        "config": config_to_dict(ctx.config),
        "threads": ctx.threads,
        "versions": {
            "python": sys.version.split()[0],
            "numpy": np.__version__,
            "mpmath": mpmath.__version__,
            "auxzeta": __version__,
        },
        "wall_time_s": wall,
        "n_evals": n_evals,
    }
    with open(f"{ctx.out_dir}/{command}_manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _pool_map(fn, items, threads: int):
    """Map preserving input order; results land by index, so completion
    order never leaks into any output."""
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _ensure_dir(path: str) -> None:
    import os

    os.makedirs(path, exist_ok=True)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_eval(ctx: RunContext) -> int:
    """Point evaluations of the auxiliary function over sigma x t grids."""
    t0 = time.time()
    cfg = ctx.config
    _ensure_dir(ctx.out_dir)
    tasks = [(s, t) for s in cfg.sigma_list for t in cfg.t_grid]

    def one(task):
        sigma, t = task
        method = (DIRECT_CONTOUR_METHOD if t <= cfg.t_switch else MAIN_SUM_METHOD)
        if ctx.cache is not None:
            hit = ctx.cache.lookup(sigma, t, method, cfg.quad_rel)
            if hit is not None:
                err = (cfg.quad_rel if method == DIRECT_CONTOUR_METHOD
                       else main_sum_error_bound(sigma, t))
                return [sigma, t, method, hit.value_re, hit.value_im, err, 0]
        if method == DIRECT_CONTOUR_METHOD:
            r = eval_aux_direct(complex(sigma, t), tol=cfg.quad_rel)
            value, n_ev = r.value, r.n_evals
            err = cfg.quad_rel  # contract bound; observed bound is <= this
        else:
            value = main_sum(sigma, t)
            n_ev = n_main_terms(t)
            err = main_sum_error_bound(sigma, t)
        if ctx.cache is not None:
            ctx.cache.insert(CacheRecord(sigma, t, method, cfg.quad_rel,
                                         value.real, value.imag))
        return [sigma, t, method, value.real, value.imag, err, n_ev]

    rows = _pool_map(one, tasks, ctx.threads)
    _write_csv(f"{ctx.out_dir}/eval.csv",
               ["sigma", "t", "method", "value_re", "value_im",
                "error_bound", "n_evals"], rows)
    _write_manifest(ctx, "eval", time.time() - t0, sum(r[6] for r in rows))
    return 0


def cmd_meanvalue(ctx: RunContext) -> int:
    """Moment values joined with their predicted main terms."""
    t0 = time.time()
    cfg = ctx.config
    _ensure_dir(ctx.out_dir)
    predict = predictors.predict_weighted if cfg.weighted \
        else predictors.predict_unweighted

    def one(sigma):
        if not cfg.T_grid:
            return []
        samples = mean_value.integrate_mean(sigma, list(cfg.T_grid), cfg.weighted)
        out = []
        for s in samples:
            pred = predict(sigma, s.T)
            main = pred.evaluate(s.T)
            resid = s.value - main
            scale = s.T ** pred.error_exponent
            if pred.log_factor_in_error:
                scale *= math.sqrt(math.log(s.T))
            out.append([s.sigma, s.T, s.weighted, s.value, main, resid,
                        resid / scale, s.quad_error, s.n_evals])
        return out

    groups = _pool_map(one, list(cfg.sigma_list), ctx.threads)
    rows = [r for g in groups for r in g]
    _write_csv(f"{ctx.out_dir}/meanvalue.csv",
               ["sigma", "T", "weighted", "value", "main_term", "residual",
                "scaled_residual", "quad_error", "n_evals"], rows)
    _write_manifest(ctx, "meanvalue", time.time() - t0,
                    sum(r[8] for r in rows))
    return 0


def cmd_laplace(ctx: RunContext) -> int:
    """Transform-ratio scans per sigma over the configured epsilon grid."""
    t0 = time.time()
    cfg = ctx.config
    _ensure_dir(ctx.out_dir)

    def one(sigma):
        if not cfg.epsilon_grid:
            return []
        rows = laplace.laplace_ratio_scan(sigma, list(cfg.epsilon_grid))
        return [[r.sigma, r.epsilon, r.numeric, r.predicted, r.ratio,
                 r.tail_bound] for r in rows]

    groups = _pool_map(one, list(cfg.sigma_list), ctx.threads)
    rows = [r for g in groups for r in g]
    _write_csv(f"{ctx.out_dir}/laplace.csv",
               ["sigma", "epsilon", "numeric", "predicted", "ratio",
                "tail_bound"], rows)
    _write_manifest(ctx, "laplace", time.time() - t0, 0)
    return 0


def cmd_lemmas(ctx: RunContext) -> int:
    """Bound-check tables: oscillatory, power-sum, double-sum suites."""
    t0 = time.time()
    cfg = ctx.config
    _ensure_dir(ctx.out_dir)
    rows = []
    for chk in bound_checks.random_osc_sweep(200, seed=cfg.seed):
        inp = chk.inputs
        rows.append(["osc_bound",
                     f"a={inp['a']:.6g} b={inp['b']:.6g} "
                     f"alpha={inp['alpha']:.6g} beta={inp['beta']:.6g}",
                     chk.lhs, chk.rhs_bound, chk.ratio])
    for sigma in cfg.sigma_list:
        for x in (1.0e3, 1.0e4, 1.0e5, 1.0e6):
            chk = bound_checks.power_sum_check(x, sigma)
            rows.append(["power_sum", f"x={x:.6g} sigma={sigma:.6g}",
                         chk.lhs, chk.rhs_bound, chk.ratio])
    for kind, sigmas in ((bound_checks.QUOTIENT_KIND, [-1.0]),
                         (bound_checks.PRODUCT_KIND, [0.5, 1.0, 2.0])):
        for sigma in sigmas:
            for x in (250, 500, 1000, 2000):
                chk = bound_checks.double_sum_growth(float(x), sigma, kind)
                rows.append([kind, f"x={x} sigma={sigma:.6g}",
                             chk.lhs, chk.rhs_bound, chk.ratio])
    _write_csv(f"{ctx.out_dir}/lemmas.csv",
               ["lemma", "inputs", "lhs", "bound", "ratio"], rows)
    _write_manifest(ctx, "lemmas", time.time() - t0, 0)
    return 0


def cmd_verify(ctx: RunContext, numbers: list[int] | None = None) -> int:
    """Full acceptance run; nonzero exit when any criterion fails."""
    t0 = time.time()
    _ensure_dir(ctx.out_dir)
    results = acceptance.run_all(numbers, verbose=True)
    rows = [[r.number, r.title, "pass" if r.passed else "fail",
             round(r.elapsed_s, 2)] for r in results]
    _write_csv(f"{ctx.out_dir}/verify.csv",
               ["criterion", "title", "status", "elapsed_s"], rows)
    with open(f"{ctx.out_dir}/verify_report.txt", "w", encoding="utf-8") as fh:
        for r in results:
            fh.write(r.line() + "\n")
            for d in r.details:
                fh.write(f"    {d}\n")
    _write_manifest(ctx, "verify", time.time() - t0, 0)
    n_failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - n_failed}/{len(results)} criteria passed")
    return 2 if n_failed else 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="auxzeta",
        description="Second moments of Riemann's auxiliary function: "
                    "evaluators, decompositions, asymptotic checks.")
    p.add_argument("command",
                   choices=["eval", "meanvalue", "laplace", "lemmas", "verify"])
    p.add_argument("--config", default=None, help="flat key=value config file")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: config thread_budget)")
    p.add_argument("--cache", default=None,
                   help="evaluation cache file (default: config cache_path)")
    p.add_argument("--criteria", default=None,
                   help="verify only: comma-separated criterion numbers")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config) if args.config else RunConfig().validate()
        threads = args.threads if args.threads is not None else cfg.thread_budget
        cache_path = args.cache if args.cache is not None else cfg.cache_path
        cache = EvalCache(cache_path) if cache_path else None
        _ensure_dir(args.out)
        ctx = RunContext(config=cfg, out_dir=args.out, threads=threads,
                         cache=cache)
        if args.command == "eval":
            return cmd_eval(ctx)
        if args.command == "meanvalue":
            return cmd_meanvalue(ctx)
        if args.command == "laplace":
            return cmd_laplace(ctx)
        if args.command == "lemmas":
            return cmd_lemmas(ctx)
        numbers = None
        if args.criteria:
            numbers = [int(x) for x in args.criteria.split(",")]
        return cmd_verify(ctx, numbers)
    except AuxZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
