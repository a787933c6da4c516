"""Command-line front end.

The CLI is a thin client of the service layer: by default it invokes the
same handlers in process, and with --server it sends the identical request
models to a running instance over HTTP.  --json prints the response model
verbatim, so scripted callers see the same schema either way.

Exit status: 0 on pass/success, 1 when a check is refuted or a witness is
found, 2 on any error (bad input, unknown names, resource ceiling).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import LiecohError
from .service import models

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2


def _read_source(args, prefix: str = "") -> models.DocumentSource:
    doc = getattr(args, f"{prefix}doc".replace("-", "_"))
    cat = getattr(args, f"{prefix}catalog".replace("-", "_"))
    if (doc is None) == (cat is None):
        raise LiecohError(
            f"provide exactly one of --{prefix}doc or --{prefix}catalog")
    if doc is not None:
        return models.DocumentSource(document=Path(doc).read_text())
    return models.DocumentSource(catalog=cat)


class _Client:
    """Runs requests either in process or against a remote server."""

    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None

    def call(self, path: str, request, response_model):
        if self.server is None:
            from .service import handlers

            route = {
                "/check": handlers.handle_check,
                "/cohomology": handlers.handle_cohomology,
                "/duality": handlers.handle_duality,
                "/kunneth": handlers.handle_kunneth,
                "/verify-theorem": handlers.handle_theorem,
                "/verify-corollary": handlers.handle_corollary,
                "/witness": handlers.handle_witness,
            }
            return route[path](request)
        import httpx

        reply = httpx.post(f"{self.server}{path}", json=request.model_dump(),
                           timeout=300.0)
        if reply.status_code >= 400:
            raise LiecohError(reply.json().get("detail", reply.text))
        return response_model.model_validate(reply.json())

    def catalog_entry(self, name: str) -> models.CatalogResponse:
        if self.server is None:
            from .service import handlers

            return handlers.handle_catalog(name)
        import httpx

        reply = httpx.get(f"{self.server}/catalog/{name}", timeout=60.0)
        if reply.status_code >= 400:
            raise LiecohError(reply.json().get("detail", reply.text))
        return models.CatalogResponse.model_validate(reply.json())

    def catalog_list(self) -> models.CatalogListResponse:
        if self.server is None:
            from .service import handlers

            return handlers.handle_catalog_list()
        import httpx

        reply = httpx.get(f"{self.server}/catalog", timeout=60.0)
        return models.CatalogListResponse.model_validate(reply.json())


# -- rendering ---------------------------------------------------------------

def _emit(args, response, text: str) -> None:
    if args.json:
        print(response.model_dump_json(indent=2))
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _render_check(r: models.CheckResponse) -> str:
    lines = [f"algebra of dimension {r.dim}, basis {', '.join(r.basis)}"]
    for flag in ("abelian", "nilpotent", "solvable", "semisimple", "perfect",
                 "unimodular", "ss_plus_nilpotent"):
        lines.append(f"  {flag:18s} {getattr(r, flag)}")
    lines.append(f"  radical dim {r.radical_dim}, center dim {r.center_dim}, "
                 f"derived dim {r.derived_dim}")
    return "\n".join(lines)


def _render_cohomology(r: models.CohomologyResponse) -> str:
    lines = [f"cohomology with coefficients in {r.module}:"]
    lines.append(f"  {'n':>3s} {'dim C^n':>8s} {'rank d_n':>9s} {'dim H^n':>8s}")
    for row in r.table:
        lines.append(f"  {row.degree:3d} {row.cochain_dim:8d} "
                     f"{row.coboundary_rank:9d} {row.cohomology_dim:8d}")
    if r.representatives:
        for degree, vecs in sorted(r.representatives.items(), key=lambda kv: int(kv[0])):
            lines.append(f"  representatives in degree {degree}:")
            for v in vecs:
                lines.append("    (" + ", ".join(v) + ")")
    return "\n".join(lines)


def _render_degrees(title: str, ok: bool, degrees) -> str:
    lines = [f"{title}: {'PASS' if ok else 'FAIL'}"]
    for c in degrees:
        mark = "ok" if c.ok else "MISMATCH"
        lines.append(f"  degree {c.degree}: {c.lhs} vs {c.rhs}  {mark}")
    return "\n".join(lines)


def _render_theorem(r: models.TheoremResponse) -> str:
    lines = [
        f"condition (i)  split semisimple + nilpotent: {r.condition_i}",
        f"condition (ii) family cohomology vanishes everywhere: {r.condition_ii_family}",
        f"condition (iii) family vanishes in degree {max(r.algebra_dim - 1, 0)}: {r.condition_iii_family}",
        f"condition (iv) family vanishes in degree 1: {r.condition_iv_family}",
        f"family adequate: {r.adequate}; consistency: {r.consistency}",
    ]
    if r.witnesses:
        lines.append("witnesses:")
        for w in r.witnesses:
            lines.append(f"  {w.module}: dim H^{w.degree} = {w.dim}")
    if r.skipped:
        lines.append("skipped members:")
        for s in r.skipped:
            lines.append(f"  {s.name}: {s.reason}")
    return "\n".join(lines)


def _render_corollary(r: models.CorollaryResponse) -> str:
    lines = [
        f"dimension {r.algebra_dim}"
        + (" (degrees >= 3 are vacuous)" if r.vacuous else ""),
        f"high-degree cohomology vanishes over the family: {r.family_side}",
        f"structural side: {r.structural_side}",
        f"match: {r.matches}",
    ]
    for w in r.findings:
        lines.append(f"  nonzero: {w.module} has dim H^{w.degree} = {w.dim}")
    return "\n".join(lines)


def _render_witness(r: models.WitnessResponse) -> str:
    if not r.found:
        return "no witness found within budget"
    return (f"witness {r.module}: dim H^{r.degree} = {r.dim}\n"
            + (r.document or ""))


# -- main ---------------------------------------------------------------------

def _add_source(p: argparse.ArgumentParser, prefix: str = "") -> None:
    p.add_argument(f"--{prefix}doc", metavar="FILE",
                   help="input document file")
    p.add_argument(f"--{prefix}catalog", metavar="NAME",
                   help="catalog algebra name")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecoh",
        description="Exact rational cohomology of finite-dimensional Lie algebras",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the irreducibility search")
    parser.add_argument("--ceiling", type=int, default=models.DEFAULT_CEILING,
                        help="column ceiling for cochain spaces")
    parser.add_argument("--server", metavar="URL",
                        help="run against a remote liecoh service")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural flags and unimodularity")
    _add_source(p)

    p = sub.add_parser("cohomology", help="cohomology table for one module")
    _add_source(p)
    p.add_argument("--module", default="K")
    p.add_argument("--representatives", action="store_true")

    p = sub.add_parser("duality", help="twisted-dual duality report")
    _add_source(p)
    p.add_argument("--module", default="K")

    p = sub.add_parser("kunneth", help="direct-sum / outer-tensor comparison")
    _add_source(p, "left-")
    _add_source(p, "right-")
    p.add_argument("--left-module", default="K")
    p.add_argument("--right-module", default="K")

    p = sub.add_parser("verify-theorem", help="structure vs cohomology verdict")
    _add_source(p)
    p.add_argument("--adequate", dest="adequate", action="store_true", default=None)
    p.add_argument("--not-adequate", dest="adequate", action="store_false")

    p = sub.add_parser("verify-corollary", help="high-degree vanishing verdict")
    _add_source(p)
    p.add_argument("--adequate", dest="adequate", action="store_true", default=None)
    p.add_argument("--not-adequate", dest="adequate", action="store_false")

    p = sub.add_parser("witness", help="search for a module with nonzero H^1")
    _add_source(p)
    p.add_argument("--budget", type=int, default=200)

    p = sub.add_parser("catalog", help="emit a catalog algebra as a document")
    p.add_argument("name", nargs="?", help="catalog name; omit with --list")
    p.add_argument("--list", action="store_true", help="list catalog names")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    client = _Client(args.server)
    try:
        if args.command == "check":
            req = models.CheckRequest(**_read_source(args).model_dump())
            r = client.call("/check", req, models.CheckResponse)
            _emit(args, r, _render_check(r))
            return EXIT_OK
        if args.command == "cohomology":
            req = models.CohomologyRequest(
                **_read_source(args).model_dump(),
                module=args.module,
                representatives=args.representatives,
                ceiling=args.ceiling,
            )
            r = client.call("/cohomology", req, models.CohomologyResponse)
            _emit(args, r, _render_cohomology(r))
            return EXIT_OK
        if args.command == "duality":
            req = models.DualityRequest(
                **_read_source(args).model_dump(),
                module=args.module, ceiling=args.ceiling,
            )
            r = client.call("/duality", req, models.DualityResponse)
            _emit(args, r, _render_degrees("duality", r.ok, r.degrees))
            return EXIT_OK if r.ok else EXIT_REFUTED
        if args.command == "kunneth":
            req = models.KunnethRequest(
                left=_read_source(args, "left-"),
                right=_read_source(args, "right-"),
                left_module=args.left_module,
                right_module=args.right_module,
                ceiling=args.ceiling,
            )
            r = client.call("/kunneth", req, models.KunnethResponse)
            _emit(args, r, _render_degrees("kunneth", r.ok, r.degrees))
            return EXIT_OK if r.ok else EXIT_REFUTED
        if args.command == "verify-theorem":
            req = models.TheoremRequest(
                **_read_source(args).model_dump(),
                seed=args.seed, ceiling=args.ceiling, adequate=args.adequate,
            )
            r = client.call("/verify-theorem", req, models.TheoremResponse)
            _emit(args, r, _render_theorem(r))
            return EXIT_OK if r.consistency else EXIT_REFUTED
        if args.command == "verify-corollary":
            req = models.CorollaryRequest(
                **_read_source(args).model_dump(),
                seed=args.seed, ceiling=args.ceiling, adequate=args.adequate,
            )
            r = client.call("/verify-corollary", req, models.CorollaryResponse)
            _emit(args, r, _render_corollary(r))
            return EXIT_OK if r.matches else EXIT_REFUTED
        if args.command == "witness":
            req = models.WitnessRequest(
                **_read_source(args).model_dump(),
                budget=args.budget, seed=args.seed, ceiling=args.ceiling,
            )
            r = client.call("/witness", req, models.WitnessResponse)
            _emit(args, r, _render_witness(r))
            return EXIT_REFUTED if r.found else EXIT_OK
        if args.command == "catalog":
            if args.list or args.name is None:
                r = client.catalog_list()
                _emit(args, r, "\n".join(r.names))
                return EXIT_OK
            entry = client.catalog_entry(args.name)
            if args.json:
                print(entry.model_dump_json(indent=2))
            else:
                print(entry.document, end="")
                if entry.family:
                    print(f"# default family: {', '.join(entry.family)}")
            return EXIT_OK
        if args.command == "serve":
            import uvicorn

            from .service import create_app

            uvicorn.run(create_app(), host=args.host, port=args.port)
            return EXIT_OK
    except LiecohError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    raise AssertionError("unhandled command")


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
