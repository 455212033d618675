"""``handle-irr``: command-line front end.

Exit status is 0 when the verdict passes, 2 when it fails and 1 on bad
input (unreadable ``.cmap``, unknown curve, bad flag).
"""
import argparse
import json
import os
import sys

from . import bounds, cmap, doubling, fixtures, freegrp, penner, twistword
from .surfmap import MapError, validate_map

PASS, FAIL, INPUT_ERROR = 0, 2, 1


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(INPUT_ERROR)


def _colour(word):
    if os.environ.get("HANDLE_IRR_COLOR", "") in ("", "0") or not sys.stdout.isatty():
        return word
    code = {"pass": "32", "fail": "31"}.get(word)
    return f"\033[{code}m{word}\033[0m" if code else word


def _names(text):
    if text is None:
        return None
    return [t for t in text.replace(",", " ").split() if t]


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _meta(text):
    """``key: value`` comment lines written by ``fixtures export``."""
    out = {}
    for line in cmap.comment_lines(text):
        key, sep, val = line.partition(":")
        if sep and key.strip() in ("C", "D", "theta", "word"):
            out[key.strip()] = val.strip()
    return out


def _load(path):
    text = _read_text(path)
    M = cmap.loads(text)
    problems = validate_map(M)
    if problems:
        raise InputError(f"{path}: invalid map: " + "; ".join(problems))
    return M, _meta(text)


def _systems(M, meta, args, theta=None):
    C, D = _names(args.C), _names(args.D)
    if C is None and "C" in meta:
        C = _names(meta["C"])
    if D is None and "D" in meta:
        D = _names(meta["D"])
    if C is None and D is None:
        a, b = penner.infer_systems(penner.closed_part(M) if theta is None else M, theta)
        return sorted(a), sorted(b)
    closed = set(M.closed_curves())
    if C is None:
        C = sorted(closed - set(D))
    if D is None:
        D = sorted(closed - set(C))
    return C, D


def _emit(args, doc, lines):
    if args.report == "json":
        doc = {"format": 1, "command": args.command, **doc}
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in lines))


def _penner_doc(pair):
    return {k: {"status": "pass" if v.passed else "fail", "details": list(v.details)}
            for k, v in pair.report.items()}


def _penner_lines(pair):
    out = []
    for line in pair.lines():
        head, sep, rest = line.partition(": ")
        out.append(f"{head}: {_colour(rest)}" if sep and not line.startswith(" ") else line)
    return out


def cmd_check_penner(args):
    M, meta = _load(args.file)
    C, D = _systems(M, meta, args)
    pair = penner.check_penner_pair(M, C, D)
    verdict = "pass" if pair.passed else "fail"
    _emit(args, {"C": sorted(C), "D": sorted(D), "conditions": _penner_doc(pair), "verdict": verdict},
          [f"C = {' '.join(sorted(C))}", f"D = {' '.join(sorted(D))}", *_penner_lines(pair),
           f"verdict {_colour(verdict)}"])
    return PASS if pair.passed else FAIL


def cmd_find_dual_arcs(args):
    M, meta = _load(args.file)
    C, D = _systems(M, meta, args)
    found = penner.find_dual_arcs(M, C, D)
    if args.materialize is not None:
        if not 0 <= args.materialize < len(found):
            raise InputError(f"--materialize {args.materialize}: only {len(found)} placements")
        M2 = penner.materialize(M, found[args.materialize], args.name)
        comments = [f"C: {' '.join(sorted(C))}", f"D: {' '.join(sorted(D))}", f"theta: {args.name}"]
        _write_text(args.out, cmap.dumps(M2, comments))
        if args.out in (None, "-"):
            return PASS
    _emit(args, {"placements": [{"edge": p.edge, "curve": p.curve, "regions": list(p.regions),
                                 "punctures": list(p.punctures)} for p in found]},
          [f"{k} curve={p.curve} {p.line()}" for k, p in enumerate(found)] or ["no placements"])
    return PASS if found else FAIL


def cmd_double(args):
    M, meta = _load(args.file)
    theta = args.theta or meta.get("theta")
    if theta is None:
        DM = doubling.double_surface(M)
        _write_text(args.out, doubling.dumps_doubled(DM))
        if args.out not in (None, "-"):
            _emit(args, {"genus": DM.map.genus, "chi": DM.map.surface_euler_characteristic},
                  [f"doubled surface: genus {DM.map.genus}, chi {DM.map.surface_euler_characteristic}"])
        return PASS
    C, D = _systems(M, meta, args, theta)
    try:
        DM, qr, report = doubling.build_QR(M, C, D, theta)
    except doubling.InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return FAIL
    _write_text(args.out, doubling.dumps_doubled(DM, qr))
    if args.out not in (None, "-"):
        _emit(args, {"genus": DM.map.genus, "chi": DM.map.surface_euler_characteristic,
                     "Q": sorted(qr.Q), "R": sorted(qr.R), "conditions": _penner_doc(report),
                     "verdict": "pass"},
              [f"doubled surface: genus {DM.map.genus}, chi {DM.map.surface_euler_characteristic}",
               f"Q = {' '.join(sorted(qr.Q))}", f"R = {' '.join(sorted(qr.R))}",
               *_penner_lines(report), f"verdict {_colour('pass')}"])
    return PASS


def _cert_out(args, cert):
    if args.report == "json":
        sys.stdout.write(cert.to_json())
    else:
        for line in cert.text().splitlines():
            parts = line.split(" ", 4)
            if line.startswith("step ") and len(parts) == 5:
                parts[3] = _colour(parts[3])
                line = " ".join(parts)
            print(line)
    return PASS if cert.ok else FAIL


def cmd_certify(args):
    M, meta = _load(args.file)
    theta = args.theta or meta.get("theta")
    word = args.word or meta.get("word")
    if theta is None or word is None:
        raise InputError("certify needs --theta and --word")
    C, D = _systems(M, meta, args, theta)
    return _cert_out(args, twistword.certify_irreducible(M, C, D, theta, word))


def cmd_certify_genus2(args):
    M, meta = _load(args.file)
    word = args.word or meta.get("word")
    if word is None:
        raise InputError("certify-genus2 needs --word")
    C, D = _systems(M, meta, args)
    return _cert_out(args, twistword.certify_genus2(M, C, D, word, _names(args.disc_curves)))


def cmd_pi1(args):
    f = freegrp.parse_table(args.table, args.rank)
    doc = {"table": str(f), "rank": f.rank}
    lines = [f"table {f}"]
    ok = True
    if args.check in ("auto", "automorphism"):
        log = []
        aut = freegrp.is_automorphism(f, log)
        doc["automorphism"] = aut
        doc["nielsen_log"] = log
        lines += [f"  {m}" for m in log] + [f"automorphism: {_colour('pass' if aut else 'fail')}"]
        ok = ok and aut
    if args.check in ("auto", "identity"):
        ident = freegrp.is_identity(f)
        doc["identity"] = ident
        lines.append(f"identity: {'yes' if ident else 'no'}")
        if args.check == "identity":
            ok = ok and ident
    if args.check in ("auto", "abelianization"):
        m = freegrp.abelianization_matrix(f)
        doc["abelianization"] = m
        lines.append("abelianization: " + " ".join("[" + " ".join(map(str, r)) + "]" for r in m))
        if f.rank == 2:
            try:
                anosov = freegrp.anosov_check(m)
                doc["anosov"] = anosov
                lines.append(f"trace {m[0][0] + m[1][1]}, anosov: {'yes' if anosov else 'no'}")
            except freegrp.NotAutomorphismOnHomology as exc:
                doc["anosov"] = None
                lines.append(f"anosov: {exc}")
                ok = False
            if args.check == "abelianization":
                ok = ok and bool(doc.get("anosov"))
    _emit(args, doc, lines)
    return PASS if ok else FAIL


def cmd_bounds(args):
    win = bounds.reducing_surface_window(args.genus)
    verdict = bounds.genus2_verdict(args.genus)
    lines = win.table() + [f"verdict {verdict.statement}"]
    if verdict.caveat:
        lines.append(f"caveat: {verdict.caveat}")
    _emit(args, {"genus": win.genus, "chi_boundary": win.chi_boundary, "chi_min": win.chi_min,
                 "chi_max": win.chi_max,
                 "feasible": [{"chi": c, "n": n, "components": win.patterns[c]} for c, n in win.feasible],
                 "verdict": verdict.statement, "caveat": verdict.caveat}, lines)
    return PASS


def export_text(fx):
    comments = [f"fixture {fx.name}: {fx.description}",
                f"C: {' '.join(fx.C)}", f"D: {' '.join(fx.D)}"]
    if fx.theta:
        comments.append(f"theta: {fx.theta}")
    if fx.word:
        comments.append(f"word: {fx.word}")
    return cmap.dumps(fx.map, comments)


def cmd_fixtures(args):
    if args.action == "list":
        _emit(args, {"fixtures": [{"name": f.name, "description": f.description}
                                  for f in fixtures.FIXTURES.values()]},
              [f"{f.name}  {f.description}" for f in fixtures.FIXTURES.values()])
        return PASS
    if not args.name:
        raise InputError("fixtures export needs a fixture name")
    try:
        fx = fixtures.get(args.name)
    except KeyError as exc:
        raise InputError(exc.args[0]) from None
    _write_text(args.out, export_text(fx))
    return PASS


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--report", choices=("text", "json"), default=argparse.SUPPRESS,
                        help="output form (default text)")

    p = _Parser(prog="handle-irr", description="Certify irreducible handlebody automorphisms.")
    p.add_argument("--report", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def systems(q):
        q.add_argument("--C", help="curves of system C (comma separated)")
        q.add_argument("--D", help="curves of system D (comma separated)")

    q = sub.add_parser("check-penner", parents=[common], help="check a Penner pair")
    q.add_argument("file")
    systems(q)
    q.set_defaults(func=cmd_check_penner)

    q = sub.add_parser("find-dual-arcs", parents=[common], help="list dual-arc placements")
    q.add_argument("file")
    systems(q)
    q.add_argument("--materialize", type=int, metavar="K", help="insert placement K as an arc")
    q.add_argument("--name", default="theta", help="name of the materialized arc")
    q.add_argument("--out", help="output file for --materialize (default stdout)")
    q.set_defaults(func=cmd_find_dual_arcs)

    q = sub.add_parser("double", parents=[common], help="build the boundary of S x I")
    q.add_argument("file")
    q.add_argument("--theta", help="dual arc; adds the disc boundary and the (Q, R) pair")
    systems(q)
    q.add_argument("--out", help="output .cmap file (default stdout)")
    q.set_defaults(func=cmd_double)

    q = sub.add_parser("certify", parents=[common], help="certify a twist word on S x I")
    q.add_argument("file")
    systems(q)
    q.add_argument("--theta")
    q.add_argument("--word")
    q.set_defaults(func=cmd_certify)

    q = sub.add_parser("certify-genus2", parents=[common], help="certify a word on a genus-2 boundary")
    q.add_argument("file")
    systems(q)
    q.add_argument("--word")
    q.add_argument("--disc-curves", help="curves asserted to bound discs (default: all twisted)")
    q.set_defaults(func=cmd_certify_genus2)

    q = sub.add_parser("pi1", parents=[common], help="check a free-group endomorphism table")
    q.add_argument("--rank", type=int)
    q.add_argument("--table", required=True)
    q.add_argument("--check", choices=("auto", "automorphism", "identity", "abelianization"),
                   default="auto")
    q.set_defaults(func=cmd_pi1)

    q = sub.add_parser("bounds", parents=[common], help="reducing-surface window")
    q.add_argument("--genus", type=int, required=True)
    q.set_defaults(func=cmd_bounds)

    q = sub.add_parser("fixtures", parents=[common], help="list or export the fixture corpus")
    q.add_argument("action", choices=("list", "export"))
    q.add_argument("name", nargs="?")
    q.add_argument("--out")
    q.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, MapError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"handle-irr {args.command}: {msg}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
