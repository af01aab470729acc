"""Command-line interface.

Exit codes: 0 success, 1 domain error (threshold, format, reconstruction),
2 usage error. Every random choice is driven by ``--seed`` when given.
"""

from __future__ import annotations

import argparse
import getpass
import random
import sys
import warnings
from pathlib import Path

from . import formats
from .analysis import posterior_feasibility
from .errors import BelowThresholdError, BelowThresholdWarning, SharingError
from .graph import ENUMERATION_CAP, Graph, edge_order
from .graphscheme import (
    DealParams,
    GraphSecret,
    graph_deal,
    graph_reconstruct,
    min_padding,
    min_padding_target,
    reconstruction_cost,
)
from .password import graph_to_password, password_to_rank, rank_to_graph
from .setscheme import SetSecret, set_deal, set_deal_general, set_reconstruct
from .shamir import DEFAULT_PRIME, ShamirParams, shamir_cost, shamir_deal, shamir_reconstruct


class UsageError(Exception):
    pass


def _rng(seed):
    return random.SystemRandom() if seed is None else random.Random(seed)


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError(f"seed {value} is not an unsigned 64-bit integer")
    return value


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def _emit(text: str, out) -> None:
    if out:
        _write(Path(out), text)
    else:
        sys.stdout.write(text)


def _display_key(tok: bytes):
    # integers numerically first, everything else bytewise
    try:
        return (0, int(tok), b"")
    except ValueError:
        return (1, 0, tok)


def _format_token_set(tokens) -> str:
    shown = sorted(tokens, key=_display_key)
    return "{" + ", ".join(t.decode("utf-8", "backslashreplace") for t in shown) + "}"


def cmd_deal_set(args) -> int:
    values = args.secret.split(",")
    if any(v == "" for v in values):
        raise UsageError("--secret: empty element")
    secret = SetSecret.of(values)
    rng = _rng(args.seed)
    if args.k == 3:
        shares = set_deal(secret, args.n, rng)
    else:
        shares = set_deal_general(secret, args.k, args.n, rng)
    out = Path(args.out)
    for share in shares:
        _write(out / f"s{share.index}.sshare", formats.format_set_share(share))
    print(f"wrote {len(shares)} shares (k={shares[0].k}, n={args.n}, u={secret.u}) to {out}")
    return 0


def cmd_combine_set(args) -> int:
    shares = [formats.parse_set_share(Path(p).read_text(encoding="utf-8"), p) for p in args.shares]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BelowThresholdWarning)
        result = set_reconstruct(shares, force=args.force)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print(_format_token_set(result))
    return 0


def _load_secret(path: str, alphabet_arg: str | None) -> GraphSecret:
    g = formats.parse_graph(Path(path).read_text(encoding="utf-8"), path)
    c = len(g.nodes)
    if alphabet_arg is None:
        width = len(str(max(c - 1, 0)))
        alphabet = tuple(f"{i:0{width}d}" for i in range(c))
    else:
        alphabet = tuple(alphabet_arg.split(","))
    if len(alphabet) != c:
        raise UsageError(f"--alphabet has {len(alphabet)} names but {path} has {c} nodes")
    position = {label: i for i, label in enumerate(g.nodes)}
    positional = Graph(tuple(range(c)), frozenset((position[x], position[y]) for x, y in g.edges))
    return GraphSecret(alphabet, positional)


def cmd_deal_graph(args) -> int:
    secret = _load_secret(args.secret, args.alphabet)
    c = secret.c
    floor = min_padding(c) if args.search_space is None else min_padding_target(c, args.search_space)
    if args.b == "auto":
        b = floor
    else:
        try:
            b = int(args.b)
        except ValueError:
            raise UsageError(f"--b must be an integer or 'auto', got {args.b!r}") from None
        if b < floor and not args.insecure:
            raise UsageError(f"--b {b} is below the padding floor {floor} for c={c}; add --insecure")
    params = DealParams(
        n=args.n,
        b=b,
        edge_fill_prob=args.edge_fill_prob,
        augment_prob=args.augment_prob,
        insecure=args.insecure,
        search_space=args.search_space,
    )
    shares = graph_deal(secret, params, _rng(args.seed))
    out = Path(args.out)
    for share in shares:
        _write(out / f"share{share.index}.gshare", formats.format_graph_share(share))
    print(f"wrote {len(shares)} shares (c={c}, b={b}) to {out}")
    return 0


def cmd_combine_graph(args) -> int:
    shares = [formats.parse_graph_share(Path(p).read_text(encoding="utf-8"), p) for p in args.shares]
    if len(shares) < 2:
        raise BelowThresholdError("graph reconstruction needs 2 shares")
    secret = graph_reconstruct(shares[0], shares[1])
    for other in shares[2:]:
        again = graph_reconstruct(shares[0], other)
        if again != secret:
            raise SharingError(f"share {other.index} disagrees with shares 1 and 2 of the input")
    if args.out:
        _write(Path(args.out), formats.format_graph(secret.graph))
    print("alphabet: " + ",".join(secret.alphabet))
    for x, y in secret.named_edges():
        print(f"edge: {x} {y}")
    return 0


def cmd_analyze(args) -> int:
    text = Path(args.share).read_text(encoding="utf-8")
    if text.startswith("GRAPHSHARE"):
        share = formats.parse_graph_share(text, args.share)
        graph, c = share.graph, share.c if args.c is None else args.c
    else:
        graph, c = formats.parse_graph(text, args.share), args.c
        if c is None:
            raise UsageError("--c is required for a plain .g file")
    report = posterior_feasibility(graph, c, cap=args.max_c)
    width = len(edge_order(c))
    print(f"{'candidate':>{max(width, 9)}}  feasible  witness")
    for mask, ok in report.per_candidate.items():
        nodes = ",".join(str(x) for x in report.witness.get(mask, ())) or "-"
        print(f"{mask:0{width}b}".rjust(max(width, 9)) + f"  {'yes' if ok else 'no':>8}  {nodes}")
    print(report.verdict())
    return 0


def cmd_encode_password(args) -> int:
    password = args.password if args.password is not None else getpass.getpass("password: ")
    _emit(formats.format_graph(rank_to_graph(password_to_rank(password))), args.out)
    return 0


def cmd_decode_password(args) -> int:
    g = formats.read_any_graph(args.graph)
    print(graph_to_password(g))
    return 0


def cmd_shamir_deal(args) -> int:
    params = ShamirParams(p=args.p, n=args.n)
    shares = shamir_deal(args.secret, params, _rng(args.seed))
    out = Path(args.out)
    for share in shares:
        _write(out / f"share{share.x}.pshare", formats.format_shamir_share(share))
    print(f"wrote {len(shares)} shares (p={params.p}) to {out}")
    return 0


def cmd_shamir_combine(args) -> int:
    shares = [formats.parse_shamir_share(Path(p).read_text(encoding="utf-8"), p) for p in args.shares]
    if len(shares) < 2:
        raise BelowThresholdError("Shamir reconstruction needs 2 shares")
    print(shamir_reconstruct(shares[0], shares[1]))
    return 0


def cmd_compare_cost(args) -> int:
    graph_steps = reconstruction_cost(args.c, args.b)
    shamir_ops = shamir_cost(args.bits)
    print(f"graph reconstruction steps (c={args.c}, b={args.b}): {graph_steps}")
    print(f"shamir inversion operations ({args.bits} bits): {shamir_ops}")
    print(f"ratio: {shamir_ops / graph_steps:.1f}")
    return 0


def cmd_export_dot(args) -> int:
    _emit(formats.to_dot(formats.read_any_graph(args.file)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphshare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deal-set", help="split a set of tokens (threshold k, default 3)")
    p.add_argument("--secret", required=True, help="comma-separated secret elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out", required=True, help="output directory for s<i>.sshare")
    p.set_defaults(func=cmd_deal_set)

    p = sub.add_parser("combine-set", help="intersect set shares")
    p.add_argument("shares", nargs="+")
    p.add_argument("--force", action="store_true", help="intersect even below the threshold")
    p.set_defaults(func=cmd_combine_set)

    p = sub.add_parser("deal-graph", help="split a .g graph into 2-of-n shares")
    p.add_argument("--secret", required=True, help=".g file holding the secret")
    p.add_argument("--alphabet", help="comma-separated node names, sorted (default: positions)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--b", default="auto", help="padding node count or 'auto'")
    p.add_argument("--search-space", type=int, help="brute-force space the padding must cover")
    p.add_argument("--insecure", action="store_true", help="allow --b below the padding floor")
    p.add_argument("--edge-fill-prob", type=float, default=0.5)
    p.add_argument("--augment-prob", type=float, default=0.5)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out", required=True, help="output directory for share<i>.gshare")
    p.set_defaults(func=cmd_deal_graph)

    p = sub.add_parser("combine-graph", help="reconstruct a graph from two .gshare files")
    p.add_argument("shares", nargs="+")
    p.add_argument("--out", help="write the recovered graph as .g")
    p.set_defaults(func=cmd_combine_graph)

    p = sub.add_parser("analyze", help="brute-force feasibility of every candidate secret")
    p.add_argument("share", help=".gshare file, or .g file together with --c")
    p.add_argument("--c", type=int)
    p.add_argument("--max-c", type=int, default=ENUMERATION_CAP)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("encode-password", help="password to 11-node .g graph")
    p.add_argument("--password", help="prompted without echo when omitted")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode_password)

    p = sub.add_parser("decode-password", help="11-node .g graph back to the password")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decode_password)

    p = sub.add_parser("shamir-deal", help="degree-one Shamir shares of an integer")
    p.add_argument("--secret", type=int, required=True)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--p", type=int, default=DEFAULT_PRIME)
    p.add_argument("--seed", type=_seed)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_shamir_deal)

    p = sub.add_parser("shamir-combine", help="recover the integer from two .pshare files")
    p.add_argument("shares", nargs="+")
    p.set_defaults(func=cmd_shamir_combine)

    p = sub.add_parser("compare-cost", help="operation counts: graph scheme vs. Shamir")
    p.add_argument("--c", type=int, default=11)
    p.add_argument("--b", type=int, default=93)
    p.add_argument("--bits", type=int, default=48)
    p.set_defaults(func=cmd_compare_cost)

    p = sub.add_parser("export-dot", help="DOT rendering of a .g or .gshare file")
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except (SharingError, OSError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
