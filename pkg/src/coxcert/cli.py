"""Command-line front door: file formats and certification pipelines."""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .coxeter import hyperbolicity, racg_from_flag, nerve as nerve_of
from .coxeter import CoxeterSystem, system_from_json, system_to_json
from .davis import davis_ball, hash_union_sharp, singular_subcomplex
from .homology import MatrixSizeError, homology
from .models import farrell_h3_growth, farrell_quotient, dihedral_pairs, main_theorem_report
from .presentations import (
    presentation_complex,
    spine_certificate,
    spine_complex,
    spine_presentation,
)
from .simplicial import (
    SimplicialComplex,
    complex_from_json,
    complex_to_json,
    dim_of,
    square_report,
)
from .subdivide import barycentric_subdivision


@dataclass
class RunReport:
    """Stepwise result of one CLI command; JSON round-trips losslessly."""

    command: str
    input_digest: str
    steps: list[dict] = field(default_factory=list)
    timing_seconds: Optional[float] = None

    def add(self, name: str, status: str, **data) -> None:
        self.steps.append({"name": name, "status": status, "data": data})

    @property
    def overall(self) -> str:
        statuses = [s["status"] for s in self.steps]
        if any(s == "fail" for s in statuses):
            return "fail"
        if any(s in ("indeterminate", "skipped") for s in statuses):
            return "indeterminate"
        return "pass"

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "steps": self.steps,
            "overall": self.overall,
            "timing_seconds": self.timing_seconds,
        }

    @classmethod
    def from_json(cls, data: dict) -> "RunReport":
        report = cls(
            command=data["command"],
            input_digest=data["input_digest"],
            steps=list(data["steps"]),
            timing_seconds=data.get("timing_seconds"),
        )
        if report.overall != data.get("overall"):
            raise ValueError("inconsistent overall status in report JSON")
        return report

    def exit_code(self) -> int:
        return 1 if self.overall == "fail" else 0


class InputError(Exception):
    pass


def _digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load_json(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(raw), _digest_bytes(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _load_complex(path: str) -> tuple[SimplicialComplex, str]:
    data, digest = _load_json(path)
    try:
        return complex_from_json(data), digest
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _load_system_or_complex(path: str) -> tuple[CoxeterSystem, str, Optional[str]]:
    """Accept a Coxeter system or a flag complex (implying racg_from_flag)."""
    data, digest = _load_json(path)
    if isinstance(data, dict) and "matrix" in data:
        try:
            return system_from_json(data), digest, None
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    try:
        complex_ = complex_from_json(data)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        return racg_from_flag(complex_), digest, None
    except ValueError as exc:
        return None, digest, str(exc)  # non-flag input: a failed check, not an input error


def _homology_table(k: SimplicialComplex, reduced: bool) -> list[dict]:
    return homology(k, reduced=reduced).to_json(max_degree=max(k.dim(), 0))


# -- commands -----------------------------------------------------------------


def cmd_homology(args) -> RunReport:
    k, digest = _load_complex(args.path)
    report = RunReport("homology", digest)
    result = homology(k, reduced=args.reduced)
    report.add(
        "homology",
        "pass",
        reduced=args.reduced,
        table=result.to_json(max_degree=max(k.dim(), 0)),
        euler_characteristic=k.euler_characteristic(),
    )
    return report


def cmd_hyperbolic(args) -> RunReport:
    sys_, digest, refusal = _load_system_or_complex(args.path)
    report = RunReport("hyperbolic", digest)
    if refusal is not None:
        report.add("flag-input", "fail", reason=refusal)
        return report
    hyp = hyperbolicity(sys_)
    status = "pass" if hyp.hyperbolic is not None else "indeterminate"
    report.add(
        "hyperbolicity",
        status,
        right_angled=hyp.right_angled,
        flag=hyp.flag,
        empty_squares=[list(s) for s in hyp.empty_squares],
        hyperbolic=hyp.hyperbolic,
        z2_witness=list(hyp.z2_witness) if hyp.z2_witness else None,
    )
    return report


def cmd_nerve(args) -> RunReport:
    data, digest = _load_json(args.path)
    try:
        sys_ = system_from_json(data)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    report = RunReport("nerve", digest)
    report.add("nerve", "pass", complex=complex_to_json(nerve_of(sys_)))
    return report


def cmd_racg(args) -> RunReport:
    k, digest = _load_complex(args.path)
    report = RunReport("racg", digest)
    try:
        sys_ = racg_from_flag(k)
    except ValueError as exc:
        report.add("flag-input", "fail", reason=str(exc))
        return report
    report.add("racg", "pass", system=system_to_json(sys_))
    return report


def cmd_davis(args) -> RunReport:
    sys_, digest, refusal = _load_system_or_complex(args.path)
    report = RunReport("davis", digest)
    if refusal is not None:
        report.add("flag-input", "fail", reason=refusal)
        return report
    if not sys_.right_angled:
        report.add("right-angled", "fail", reason="davis balls require a right-angled system")
        return report
    ball = davis_ball(sys_, args.radius)
    report.add(
        "ball",
        "pass",
        radius=args.radius,
        cosets=len(ball.cosets),
        realization_dim=ball.realization_dim(),
    )
    if args.sharp:
        extracted, kind = hash_union_sharp(ball), "sharp"
        extracted_dim = dim_of(extracted)
    elif args.singular:
        kind = "singular"
        extracted_dim = ball.singular_dim()
        try:
            extracted = singular_subcomplex(ball, max_cells=args.max_cells)
        except MatrixSizeError as exc:
            extracted = None
            report.add("extract", "skipped", kind=kind, reason=str(exc), dim=extracted_dim)
    else:
        extracted, kind = None, None
    if kind and (args.sharp or extracted is not None):
        cells = sum(extracted.counts())
        report.add("extract", "pass", kind=kind, dim=extracted_dim, cells=cells)
        if cells > args.max_homology_cells:
            report.add(
                "homology",
                "skipped",
                reason=f"{cells} cells exceed the homology cap {args.max_homology_cells}",
            )
        else:
            try:
                table = _homology_table(extracted, reduced=True)
                report.add("homology", "pass", table=table)
            except MatrixSizeError as exc:
                report.add("homology", "skipped", reason=str(exc))
    if args.dump:
        with open(args.dump, "w") as fh:
            json.dump(ball.to_json(), fh, indent=1, sort_keys=True)
    return report


def cmd_farrell(args) -> RunReport:
    report = RunReport("farrell", _digest_bytes(str(args.slopes).encode()))
    if args.slopes == 0:
        h = homology(farrell_quotient([]))
        report.add(
            "bare-torus",
            "pass" if (h.betti(3), h.betti(1)) == (0, 2) else "fail",
            betti=[h.betti(i) for i in range(4)],
        )
        return report
    ranks = farrell_h3_growth(args.slopes)
    monotone = all(a <= b for a, b in zip(ranks, ranks[1:]))
    report.add("h3-growth", "pass" if monotone else "fail", ranks=ranks)
    return report


def cmd_spine(args) -> RunReport:
    report = RunReport("spine", _digest_bytes(b"spine"))
    l = spine_complex(compact=not args.no_compact)
    report.add("build", "pass", counts=l.counts())
    h = homology(l, reduced=True)
    report.add("acyclicity", "pass" if h.is_trivial() else "fail", homology=repr(h))
    sq = square_report(l)
    report.add("flag", "pass" if sq.is_flag else "fail", witness=sq.flag_witness)
    report.add(
        "no-squares",
        "pass" if not sq.empty_squares else "fail",
        empty_squares=len(sq.empty_squares),
    )
    cert = spine_certificate()
    order = cert.subgroup_order()
    report.add(
        "certificate",
        "pass" if cert.valid and order == 60 else "fail",
        degree=cert.degree,
        images=[list(p) for p in cert.images],
        subgroup_order=order,
    )
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(complex_to_json(l), fh, indent=1, sort_keys=True)
    if args.cert_out:
        with open(args.cert_out, "w") as fh:
            json.dump(cert.to_json(), fh, indent=1, sort_keys=True)
    return report


def cmd_certify_main_theorem(args) -> RunReport:
    report = RunReport("certify-main-theorem", _digest_bytes(b"certify-main-theorem"))
    if args.skip_nsq_subdivision:
        l = barycentric_subdivision(presentation_complex(spine_presentation()))
        report.add("build", "pass", variant="flagified-only", counts=l.counts())
    else:
        l = spine_complex()
        report.add("build", "pass", variant="spine", counts=l.counts())
    h = homology(l, reduced=True)
    report.add("acyclicity", "pass" if h.is_trivial() else "fail")
    sq = square_report(l)
    report.add("flag", "pass" if sq.is_flag else "fail", witness=sq.flag_witness)
    report.add("squares", "pass", empty_squares=len(sq.empty_squares))
    cert = spine_certificate()
    report.add(
        "certificate",
        "pass" if cert.valid and cert.subgroup_order() == 60 else "fail",
    )
    mt = main_theorem_report(l, cert)
    if not mt.ok:
        report.add("hypotheses", "fail", failures=list(mt.hypothesis_failures))
        return report
    report.add("hyperbolicity", "pass", hyperbolic=mt.hyperbolic)
    if mt.hyperbolic:
        sys_ = racg_from_flag(l)
        if args.radius < 1:
            report.add(
                "singular-dimension",
                "indeterminate",
                reason="insufficient radius",
                radius=args.radius,
            )
        else:
            ball = davis_ball(sys_, args.radius)
            sdim = ball.singular_dim()
            rdim = ball.realization_dim()
            ok = sdim == 2 and rdim == dim_of(l) + 1
            report.add(
                "singular-dimension",
                "pass" if ok else "fail",
                radius=args.radius,
                singular_dim=sdim,
                ball_dim=rdim,
            )
        report.add("dihedral-pairs", "pass", count=mt.dihedral_pair_count)
    report.add(
        "report",
        "pass",
        main_theorem=mt.to_json(),
        predicted_cd=mt.predicted_cd,
        predicted_gd=mt.predicted_gd,
    )
    return report


# -- entry point ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxcert",
        description="Certificates for right-angled Coxeter group dimension counts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", help="integral homology of a complex JSON file")
    p.add_argument("path")
    p.add_argument("--reduced", action="store_true")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("hyperbolic", help="flag-no-squares hyperbolicity test")
    p.add_argument("path", help="Coxeter system JSON or flag complex JSON")
    p.set_defaults(func=cmd_hyperbolic)

    p = sub.add_parser("nerve", help="nerve of a Coxeter system")
    p.add_argument("path")
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("racg", help="right-angled system from a flag complex")
    p.add_argument("path")
    p.set_defaults(func=cmd_racg)

    p = sub.add_parser("davis", help="finite-radius Davis-complex ball")
    p.add_argument("path", help="Coxeter system JSON or flag complex JSON")
    p.add_argument("--radius", type=int, default=1)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--singular", action="store_true")
    group.add_argument("--sharp", action="store_true")
    p.add_argument("--dump", help="write the ball JSON to this path")
    p.add_argument("--max-cells", type=int, default=2000000)
    p.add_argument("--max-homology-cells", type=int, default=150000)
    p.set_defaults(func=cmd_davis)

    p = sub.add_parser("farrell", help="H3 growth of slope-filled torus models")
    p.add_argument("--slopes", type=int, default=3)
    p.set_defaults(func=cmd_farrell)

    p = sub.add_parser("spine", help="build and certify the canonical example complex")
    p.add_argument("--out", help="write the complex JSON here")
    p.add_argument("--cert-out", help="write the certificate JSON here")
    p.add_argument("--no-compact", action="store_true", help="skip the contraction pass")
    p.set_defaults(func=cmd_spine)

    p = sub.add_parser("certify-main-theorem", help="end-to-end certification pipeline")
    p.add_argument("--radius", type=int, default=1)
    p.add_argument(
        "--skip-nsq-subdivision",
        action="store_true",
        help="use the flagified presentation complex (still has empty squares)",
    )
    p.set_defaults(func=cmd_certify_main_theorem)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    try:
        report: RunReport = args.func(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True))
        return 2
    report.timing_seconds = round(time.monotonic() - start, 3)
    print(json.dumps(report.to_json(), indent=1, sort_keys=True))
    return report.exit_code()


if __name__ == "__main__":
    sys.exit(main())
