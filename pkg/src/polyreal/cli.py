"""Command-line front end.

Words are read exactly as displayed: ``--word 3,1,2`` is the sequence
``iota = (..., 3, 1, 2, 3, 1, 2)``, so ``i_1 = 2``.  Pass ``--show-iota 12`` to
print ``i_1 ... i_12`` alongside any result.

Every subcommand writes JSON (sorted keys, exact integers) to stdout or ``--out``.
Exit status is 0 on success, 1 when a check fails or a computation cannot
finish, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import verify as V
from .cartan import FAMILIES, RootSystemError, build_root_system, check_dominant, dominant_weights
from .closure import (
    DEFAULT_CAP,
    ClosureError,
    ample_witness,
    check_positivity,
    check_strict_positivity,
    default_seed_rows,
    default_window,
    xi_infty,
    xi_lambda,
)
from .crystal import CrystalError, CrystalPoint, epsilon_star, epsilon_star_oracle, generate_b_lambda
from .sequence import IotaSequence, SequenceError, parse_word
from .tableaux import TableauError, expand, gen_tab_infty_tableaux, tab_lambda_items

SUITES = ("paper-examples", "closure", "realization", "closedness", "positivity",
          "box-identities", "crystal-axioms", "epsilon-star", "all")


class UsageError(ValueError):
    pass


@dataclass
class CliConfig:
    family: str | None
    rank: int | None
    word: tuple[int, ...] | None
    lam: tuple[int, ...] | None
    window: int | None
    rows: int | None
    cap: int
    out: str | None
    suite: str
    show_iota: int | None

    def root_system(self):
        if self.family is None or self.rank is None:
            raise UsageError("family and rank are required (positionally or via --family/--rank)")
        return build_root_system(self.family, self.rank)

    def sequence(self) -> IotaSequence:
        rs = self.root_system()
        if self.word is None:
            raise UsageError("--word is required")
        return IotaSequence(rs, self.word)


def _int_list(text: str, what: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not text.strip() or any(not p for p in parts):
        raise UsageError(f"malformed {what} {text!r}: expected comma-separated integers")
    out = []
    for pos, p in enumerate(parts, start=1):
        try:
            out.append(int(p))
        except ValueError:
            raise UsageError(f"malformed {what} {text!r}: entry {pos} ({p!r}) is not an integer") from None
    return tuple(out)


def make_config(args: argparse.Namespace) -> CliConfig:
    family = args.family or args.family_pos
    rank = args.rank if args.rank is not None else args.rank_pos
    if args.family and args.family_pos and args.family != args.family_pos:
        raise UsageError(f"conflicting families {args.family_pos!r} and {args.family!r}")
    if args.rank is not None and args.rank_pos is not None and args.rank != args.rank_pos:
        raise UsageError(f"conflicting ranks {args.rank_pos} and {args.rank}")
    if family is not None:
        family = family.upper()
        if family not in FAMILIES:
            raise UsageError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    word = None
    if args.word is not None:
        try:
            word = parse_word(args.word)
        except SequenceError as exc:
            raise UsageError(str(exc)) from None
    lam = _int_list(args.lam, "lambda") if args.lam is not None else None
    if lam is not None and rank is not None and len(lam) != rank:
        raise UsageError(f"lambda has {len(lam)} entries but rank is {rank}")
    for name in ("window", "rows", "cap"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise UsageError(f"--{name} must be positive")
    return CliConfig(family, rank, word, lam, args.window, getattr(args, "rows", None),
                     args.cap or DEFAULT_CAP, args.out, getattr(args, "suite", "all"), args.show_iota)


def _header(cfg: CliConfig, seq: IotaSequence | None) -> dict:
    d: dict = {"family": cfg.family, "rank": cfg.rank}
    if seq is not None:
        d["word"] = list(seq.word)
        if cfg.show_iota:
            d["iota"] = seq.letters(cfg.show_iota)
    return d


def _require_lambda(cfg: CliConfig, seq: IotaSequence) -> tuple[int, ...]:
    if cfg.lam is None:
        raise UsageError("--lambda is required for this subcommand")
    try:
        check_dominant(seq.rs, cfg.lam)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None
    return cfg.lam


# subcommands


def cmd_check(cfg: CliConfig) -> tuple[dict, int]:
    seq = cfg.sequence()
    out = _header(cfg, seq)
    out["adapted"] = seq.is_adapted()
    for key, fn in (("positivity", check_positivity), ("strict_positivity", check_strict_positivity)):
        try:
            out[key] = fn(seq, cfg.rows, cfg.window, cfg.cap)
        except ClosureError as exc:
            out[key] = None
            out[f"{key}_error"] = str(exc)
    if cfg.lam is not None:
        lam = _require_lambda(cfg, seq)
        out["lambda"] = list(lam)
        try:
            w = ample_witness(seq, lam, cfg.rows, cfg.window, cfg.cap)
            out["ample"] = w is None
            if w is not None:
                out["ample_witness"] = {"form": w.to_json(seq), "text": w.format(seq), "value_at_zero": w.constant_at(lam)}
        except ClosureError as exc:
            out["ample"] = None
            out["ample_error"] = str(exc)
    return out, 0


def cmd_inequalities(cfg: CliConfig, infty: bool = False) -> tuple[dict, int]:
    seq = cfg.sequence()
    rows = cfg.rows or default_seed_rows(seq)
    window = cfg.window or default_window(seq, rows)
    res = xi_infty(seq, rows, window, cfg.cap) if infty else xi_lambda(seq, rows, window, cfg.cap)
    forms = list(res.forms)
    out = _header(cfg, seq)
    if cfg.lam is not None and not infty:
        lam = _require_lambda(cfg, seq)
        forms = list(dict.fromkeys(f.specialize(lam) for f in forms))
        out["lambda"] = list(lam)
    out.update({"set": "Xi" if infty else "Xi[lambda]", "window": window, "seed_rows": rows,
                "seeds": res.seeds, "count": len(forms), "forms": [f.to_json(seq) for f in forms]})
    return out, 0


def cmd_tableaux(cfg: CliConfig, max_shift: int | None = None, k: int | None = None) -> tuple[dict, int]:
    seq = cfg.sequence()
    seq.require_adapted()
    out = _header(cfg, seq)
    shift = max_shift if max_shift is not None else seq.n
    out["max_shift"] = shift
    out["infty"] = [{"tableau": T.to_json(), "form": expand(seq, T).to_json(seq)}
                    for T in gen_tab_infty_tableaux(seq, shift)]
    ks = [k] if k is not None else list(seq.rs.index_set())
    lam_out = {}
    for kk in ks:
        if not 1 <= kk <= seq.n:
            raise UsageError(f"--k must lie in 1..{seq.n}")
        lam_out[str(kk)] = [
            {"branch": it.branch, "tableau": it.tableau.to_json() if it.tableau else None,
             "form": it.form(seq).to_json(seq)}
            for it in tab_lambda_items(seq, kk)
        ]
    out["lambda"] = lam_out
    return out, 0


def cmd_enumerate(cfg: CliConfig) -> tuple[dict, int]:
    seq = cfg.sequence()
    lam = _require_lambda(cfg, seq)
    pts = generate_b_lambda(seq, lam, cfg.window, cfg.cap)
    rows = sorted((p.to_json(seq) for p in pts), key=lambda r: [(e["s"], e["j"], e["a"]) for e in r])
    out = _header(cfg, seq)
    out.update({"lambda": list(lam), "count": len(rows), "points": rows})
    return out, 0


def read_point(seq: IotaSequence, text: str) -> CrystalPoint:
    """A point given as JSON text or ``@path``: ``[{"s": .., "j": .., "a": ..}, ...]``."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        data = json.loads(text)
        if not isinstance(data, list):
            raise TypeError
        return CrystalPoint.from_json(seq, data)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"malformed point: expected a JSON list of {{s, j, a}} objects ({exc})") from None


def cmd_epsilon_star(cfg: CliConfig, point: str, i: int | None = None, oracle: bool = False) -> tuple[dict, int]:
    seq = cfg.sequence()
    seq.require_adapted()
    x = read_point(seq, point)
    idx = [i] if i is not None else list(seq.rs.index_set())
    if any(not 1 <= t <= seq.n for t in idx):
        raise UsageError(f"-i must lie in 1..{seq.n}")
    out = _header(cfg, seq)
    out["point"] = x.to_json(seq)
    out["epsilon_star"] = {str(t): epsilon_star(seq, x, t) for t in idx}
    if oracle:
        out["oracle"] = {str(t): epsilon_star_oracle(seq, x, t) for t in idx}
    return out, 0


# verify


def _targets(cfg: CliConfig) -> list[IotaSequence]:
    if cfg.word is not None:
        return [cfg.sequence()]
    if cfg.family is not None and cfg.rank is not None:
        return V.all_words(cfg.root_system())
    return [s for s in V.sweep() if (cfg.family is None or s.rs.family == cfg.family)
            and (cfg.rank is None or s.n == cfg.rank)]


def _job(suite: str, family: str, rank: int, word: tuple[int, ...], lam) -> list[dict]:
    seq = IotaSequence(build_root_system(family, rank), word)
    if suite == "closure":
        reps = [V.verify_closure_equality(seq)]
    elif suite == "closedness":
        reps = [V.verify_closedness(seq)]
    elif suite == "positivity":
        reps = [V.verify_positivity_suite(seq)]
    elif suite == "box-identities":
        reps = [V.verify_box_identities(seq)]
    elif suite == "crystal-axioms":
        reps = [V.verify_crystal_axioms(seq), V.verify_crystal_axioms(seq, (1,) * rank)]
    elif suite == "realization":
        system = V.inequality_system(seq)
        weights = [tuple(lam)] if lam is not None else [w for w in dominant_weights(rank, 2) if any(w)]
        reps = [V.verify_realization(seq, w, system) for w in weights]
    else:
        raise ValueError(suite)
    return [r.to_json() for r in reps]


def cmd_verify(cfg: CliConfig, jobs: int = 1) -> tuple[dict, int]:
    suites = [s for s in SUITES if s != "all"] if cfg.suite == "all" else [cfg.suite]
    reports: list[dict] = []
    for name in ("paper-examples", "epsilon-star"):
        if name in suites:
            fn = V.run_paper_examples if name == "paper-examples" else V.verify_epsilon_star_fixtures
            reports.append(fn().to_json())
    targets = _targets(cfg) if any(s not in ("paper-examples", "epsilon-star") for s in suites) else []
    if cfg.lam is not None and targets and any(len(cfg.lam) != t.n for t in targets):
        raise UsageError("--lambda length must match the rank of every selected word")
    work = [(s, t.rs.family, t.n, t.word, cfg.lam) for s in suites
            if s not in ("paper-examples", "epsilon-star") for t in targets]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_job, *zip(*work))) if work else []
    else:
        results = [_job(*w) for w in work]
    for r in results:
        reports.extend(r)
    ok = all(r["outcome"] == "pass" for r in reports)
    summary = {"selected": suites, "reports": len(reports),
               "failed": sum(r["outcome"] != "pass" for r in reports), "outcome": "pass" if ok else "fail"}
    return {"summary": summary, "reports": reports}, 0 if ok else 1


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("family_pos", nargs="?", metavar="FAMILY", help="A, B, C or D")
    common.add_argument("rank_pos", nargs="?", type=int, metavar="RANK")
    common.add_argument("--family", help="A, B, C or D")
    common.add_argument("--rank", type=int)
    common.add_argument("--word", help="comma-separated letters, read as displayed: 3,1,2 means (...,3,1,2,3,1,2)")
    common.add_argument("--lambda", dest="lam", metavar="L1,...,LN", help="dominant weight <lambda, h_i>")
    common.add_argument("--window", type=int, help="window in rows")
    common.add_argument("--rows", type=int, help="seed rows for the B(infinity) closure (default 2n+1)")
    common.add_argument("--cap", type=int, help=f"closure / enumeration cap (default {DEFAULT_CAP})")
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--show-iota", type=int, metavar="N", help="include i_1 ... i_N in the output")

    p = argparse.ArgumentParser(prog="polyreal", description="Polyhedral realizations of crystal bases.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="adaptedness, positivity and ampleness")
    q = sub.add_parser("inequalities", parents=[common], help="the closure Xi[lambda] (or Xi with --infty)")
    q.add_argument("--infty", action="store_true", help="emit Xi_iota instead of Xi_iota[lambda]")
    q = sub.add_parser("tableaux", parents=[common], help="column tableaux and their forms")
    q.add_argument("--max-shift", type=int)
    q.add_argument("--k", type=int, help="only Tab_k[lambda] for this k")
    sub.add_parser("enumerate", parents=[common], help="points of B(lambda)")
    q = sub.add_parser("epsilon-star", parents=[common], help="eps*_i of a point of B(infinity)")
    q.add_argument("--point", required=True, help='JSON [{"s":..,"j":..,"a":..}] or @file')
    q.add_argument("-i", type=int, help="a single index (default: all)")
    q.add_argument("--oracle", action="store_true", help="also compute eps* by transport along the crystal")
    q = sub.add_parser("verify", parents=[common], help="run verification suites")
    q.add_argument("--suite", choices=SUITES, default="all")
    q.add_argument("--jobs", type=int, default=1, help="worker processes")
    return p


def dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        cmd = args.command
        if cmd == "check":
            doc, code = cmd_check(cfg)
        elif cmd == "inequalities":
            doc, code = cmd_inequalities(cfg, args.infty)
        elif cmd == "tableaux":
            doc, code = cmd_tableaux(cfg, args.max_shift, args.k)
        elif cmd == "enumerate":
            doc, code = cmd_enumerate(cfg)
        elif cmd == "epsilon-star":
            doc, code = cmd_epsilon_star(cfg, args.point, args.i, args.oracle)
        else:
            doc, code = cmd_verify(cfg, args.jobs)
    except (UsageError, SequenceError, RootSystemError, TableauError) as exc:
        parser.error(str(exc))
    except (ClosureError, CrystalError, V.LatticeBoundError) as exc:
        print(f"polyreal: {exc}", file=sys.stderr)
        return 1
    text = dump(doc)
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
