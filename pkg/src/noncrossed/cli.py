"""`nw`: thin command-line client of the certificate service.

By default requests run against an in-process application instance, so no
server is needed; --server points the same client at a remote deployment.
Exit codes: 0 all checks pass, 1 a check failed, 2 search budget
exhausted, 64 usage error, 65 malformed input data.

Reports are emitted as JSON (the authoritative format) or as a plain-text
table derived from it, and are byte-identical across runs for identical
flags and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_SEARCH_EXHAUSTED = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class _Parser(argparse.ArgumentParser):
    """argparse with the usage exit code pinned to 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nw", description=__doc__.splitlines()[0])
    parser.add_argument("--server", metavar="URL", default=None,
                        help="base URL of a running service (default: in-process)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    witness = sub.add_parser("witness", help="build a noncrossed-product witness")
    wsub = witness.add_subparsers(dest="pipeline", required=True, parser_class=_Parser)

    psq = wsub.add_parser("psq", help="degree-p^2 witness over Q")
    psq.add_argument("--p", type=int, required=True, help="odd prime")
    psq.add_argument("--budget", type=int, default=None,
                     help="prime-search value bound (or env NW_BUDGET)")
    _output_flags(psq)

    deg8 = wsub.add_parser("deg8", help="degree-8 witness over F_p(t)")
    deg8.add_argument("--p", type=int, required=True,
                      help="prime congruent to 3 mod 8")
    _output_flags(deg8)

    mn = sub.add_parser("mn-demo", help="twisted-series identity demonstration")
    mn.add_argument("--samples", type=int, default=1000)
    mn.add_argument("--seed", type=int, default=0)
    _output_flags(mn)

    check = sub.add_parser("check-profile",
                           help="validate an invariant profile file")
    check.add_argument("path", help="JSON file with a profile "
                                    "(optionally {'profile': ..., 'extension': ...})")
    _output_flags(check)

    serve = sub.add_parser("serve", help="run the certificate service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _output_flags(parser):
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--out", metavar="PATH", default=None,
                        help="also write the JSON report to this file")


def _client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server)
    # in-process transport against the bundled application; the test client
    # import warns about its httpx backing, which is noise for CLI use
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

        from .service.app import app

        return TestClient(app)


def _emit(report: dict, fmt: str, out_path: str | None) -> int:
    text = json.dumps(report, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    print(_render_text(report) if fmt == "text" else text)
    payload = report.get("payload", {})
    if "search_error" in payload:
        return EXIT_SEARCH_EXHAUSTED
    return EXIT_PASS if report.get("all_pass") else EXIT_CHECK_FAILED


def _render_text(report: dict) -> str:
    lines = [f"kind: {report['kind']}  (schema {report['version']})"]
    payload = report.get("payload", {})
    for key in ("p", "q", "m", "r", "a", "b", "v1", "v2", "samples", "seed", "degree"):
        if key in payload:
            lines.append(f"{key} = {payload[key]}")
    if "search_error" in payload:
        lines.append(f"SEARCH FAILED: {payload['search_error']}")
    if "profile" in payload:
        entries = payload["profile"].get("entries", [])
        lines.append("profile: " + ", ".join(
            f"{e['place']} -> {e['inv']}" for e in entries))
    for section in payload.get("contexts", []):
        lines.append(f"context {section['name']}: "
                     f"[D:Z(D)] = {section['dim_over_center']}, "
                     f"[A:F] = {section['dim_algebra']}")
        lines.extend(_check_lines(section.get("checks", [])))
    lines.extend(_check_lines(payload.get("checks", [])))
    lines.extend(_check_lines(payload.get("center_spot_checks", [])))
    if "conclusion" in payload:
        lines.append(f"conclusion: {payload['conclusion']}")
    lines.append("result: " + ("ALL CHECKS PASS" if report.get("all_pass")
                               else "CHECK FAILURE"))
    return "\n".join(lines)


def _check_lines(checks) -> list[str]:
    return [f"  {'PASS' if c['pass'] else 'FAIL'} {c['name']}: {c['detail']}"
            for c in checks]


def _request(client, method: str, url: str, **kwargs):
    resp = client.request(method, url, **kwargs)
    if resp.status_code == 200:
        return resp.json()
    detail = {}
    try:
        detail = resp.json().get("detail", {})
    except ValueError:
        pass
    if isinstance(detail, dict) and detail.get("error") == "usage":
        print(f"nw: usage error: {detail.get('message')}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    if isinstance(detail, dict) and detail.get("error") == "data":
        print(f"nw: bad input data: {detail.get('message')}", file=sys.stderr)
        raise SystemExit(EXIT_DATA)
    print(f"nw: service error {resp.status_code}: {resp.text}", file=sys.stderr)
    raise SystemExit(EXIT_DATA)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "serve":
        import uvicorn

        uvicorn.run("noncrossed.service.app:app", host=args.host, port=args.port)
        return EXIT_PASS

    with _client(args.server) as client:
        if args.command == "witness" and args.pipeline == "psq":
            budget = args.budget
            if budget is None and os.environ.get("NW_BUDGET"):
                budget = int(os.environ["NW_BUDGET"])
            body = {"p": args.p}
            if budget is not None:
                body["budget"] = budget
            report = _request(client, "POST", "/witness/psq", json=body)
        elif args.command == "witness" and args.pipeline == "deg8":
            report = _request(client, "POST", "/witness/deg8", json={"p": args.p})
        elif args.command == "mn-demo":
            report = _request(client, "POST", "/mn-demo",
                              json={"samples": args.samples, "seed": args.seed})
        elif args.command == "check-profile":
            try:
                with open(args.path) as fh:
                    obj = json.load(fh)
            except OSError as exc:
                print(f"nw: cannot read {args.path}: {exc}", file=sys.stderr)
                raise SystemExit(EXIT_DATA) from exc
            except json.JSONDecodeError as exc:
                print(f"nw: {args.path} is not valid JSON: {exc.msg} at line "
                      f"{exc.lineno} column {exc.colno}", file=sys.stderr)
                raise SystemExit(EXIT_DATA) from exc
            if isinstance(obj, dict) and "entries" in obj:
                body = {"profile": obj, "extension": None}
            elif isinstance(obj, dict):
                body = {"profile": obj.get("profile"),
                        "extension": obj.get("extension")}
            else:
                print(f"nw: {args.path} does not contain a profile object",
                      file=sys.stderr)
                raise SystemExit(EXIT_DATA)
            report = _request(client, "POST", "/check-profile", json=body)
        else:  # pragma: no cover - argparse enforces the command set
            raise SystemExit(EXIT_USAGE)

    return _emit(report, args.format, args.out)


if __name__ == "__main__":
    sys.exit(main())
