"""Command line front end.

Exit codes: 0 success, 1 a verification or enumeration check failed,
2 usage error (click's default). Normal-form commands warn on stderr for
n < 6, where the represented image is a proper quotient.
"""

from __future__ import annotations

import json
import math
import os
import sys

import click

from . import homology as hom
from .enumeration import EnumerationConfig, enumerate_cosets
from .normal_form import (commutator, element_order, evaluate, get_context,
                          image_order, multiply)
from .presentation import (abelianize, build_gamma, build_gamma_hat,
                           parse_presentation, serialize)
from .symbols import parse_symbol
from .verification import (PENTAGON_TABLES, verify_commutator_classes,
                           verify_pentagon_tables, verify_relations)
from .words import parse_word

MEMORY_ENV = "QUADGROUP_MAX_MEMORY"


def _quotient_banner(n):
    if n < 6:
        click.echo(f"note: n={n} < 6, computing in the quotient "
                   "(Z/2) x~ H1 only", err=True)


def _emit(payload: dict, as_json: bool):
    if as_json:
        click.echo(json.dumps(payload))
    else:
        for k, v in payload.items():
            click.echo(f"{k}: {v}")


@click.group()
def main():
    """Exact computation in the quadruple-symbol groups."""


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--variant", type=click.Choice(["gamma", "gamma-hat"]),
              default="gamma", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write to a file instead of stdout")
def presentation(n, variant, out):
    """Emit the defining presentation in the text format."""
    p = build_gamma(n) if variant == "gamma" else build_gamma_hat(n)
    text = serialize(p)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@main.command("eval")
@click.option("--n", type=int, required=True)
@click.option("--word", required=True,
              help='e.g. "(1 2 3 4)(1 2 3 5)^-1"')
@click.option("--json/--plain", "as_json", default=False)
def eval_cmd(n, word, as_json):
    """Evaluate a word to its normal form."""
    _quotient_banner(n)
    w = parse_word(word, n)
    el = evaluate(w, n)
    _emit({"n": n, "word": word, "normal_form": str(el),
           "eps0": el.eps0, "coeffs": el.coeff_hex()}, as_json)


@main.command("commutator")
@click.option("--n", type=int, required=True)
@click.option("--word", "words", required=True, multiple=True,
              help="exactly two words")
@click.option("--json/--plain", "as_json", default=False)
def commutator_cmd(n, words, as_json):
    """Commutator [x, y] of two words, in normal form."""
    if len(words) != 2:
        raise click.UsageError("need exactly two --word options")
    _quotient_banner(n)
    x = evaluate(parse_word(words[0], n), n)
    y = evaluate(parse_word(words[1], n), n)
    el = commutator(x, y)
    _emit({"n": n, "commutator": str(el), "central": el.coeffs == 0},
          as_json)


@main.command("order")
@click.option("--n", type=int, required=True)
@click.option("--word", default=None, help="element order of this word")
@click.option("--json/--plain", "as_json", default=False)
def order_cmd(n, word, as_json):
    """Order of an element, or of the whole represented image."""
    _quotient_banner(n)
    if word is not None:
        el = evaluate(parse_word(word, n), n)
        _emit({"n": n, "word": word, "order": element_order(el)}, as_json)
    else:
        total = image_order(n)
        _emit({"n": n, "image_order": total,
               "log2": int(math.log2(total))}, as_json)


@main.command("homology")
@click.option("--n", type=int, required=True)
@click.option("--json/--plain", "as_json", default=False)
def homology_cmd(n, as_json):
    """GF(2) abelianization rank against the closed form C(n,3)-1."""
    rank = hom.abelianization_rank(n)
    expected = math.comb(n, 3) - 1
    _emit({"n": n, "rank": rank, "expected": expected,
           "match": rank == expected}, as_json)
    if rank != expected:
        sys.exit(1)


@main.command("verify")
@click.option("--n", type=int, required=True)
@click.option("--families", default="involutive,commutative,pentagon",
              show_default=True, help="comma-separated relator families")
@click.option("--method", type=click.Choice(["relations", "commutators", "tables"]),
              default="relations", show_default=True)
@click.option("--json/--plain", "as_json", default=False)
def verify_cmd(n, families, method, as_json):
    """Machine-check relation families in the represented image."""
    if method == "relations":
        fams = tuple(f.strip() for f in families.split(",") if f.strip())
        for f in fams:
            if f not in ("involutive", "commutative", "pentagon"):
                raise click.UsageError(f"unknown family {f!r}")
        report = verify_relations(n, fams)
    elif method == "commutators":
        report = verify_commutator_classes(n)
    else:
        report = verify_pentagon_tables(n=max(n, 12))
    payload = {"n": report.n, "relator_family": report.family,
               "checked": report.checked, "failures": len(report.failures)}
    _emit(payload, as_json)
    if report.failures:
        sys.exit(1)


@main.command("tables")
@click.option("--json/--plain", "as_json", default=False)
def tables_cmd(as_json):
    """Recheck the twelve pentagon case tables and print them."""
    report = verify_pentagon_tables()
    if as_json:
        click.echo(report.to_json())
    else:
        for no, (arrangement, rows) in enumerate(PENTAGON_TABLES, start=1):
            click.echo(f"table {no} [{' '.join(arrangement)}]")
            for cond, types, circs in rows:
                click.echo(f"  {cond:16s} {types}   {circs}")
        click.echo(f"checked {report.checked} instantiations: "
                   + ("all consistent" if report.passed else "FAILED"))
    if not report.passed:
        sys.exit(1)


@main.command("enumerate")
@click.option("--n", type=int, default=None,
              help="build the presentation for this n")
@click.option("--variant", type=click.Choice(["gamma", "gamma-hat", "gamma-ab"]),
              default="gamma", show_default=True)
@click.option("--presentation-file", "pfile", type=click.Path(exists=True),
              default=None, help="read a presentation instead of building one")
@click.option("--subgroup", multiple=True,
              help="subgroup generator word, e.g. \"(1 2 3 4)\"; repeatable")
@click.option("--strategy", type=click.Choice(["relator-driven", "definition-driven"]),
              default="definition-driven", show_default=True)
@click.option("--max-cosets", type=int, default=1 << 26, show_default=True)
@click.option("--max-memory", type=int, default=None,
              help=f"bytes for the table [default {MEMORY_ENV} or 6 GiB]")
@click.option("--lookahead/--no-lookahead", default=False, show_default=True)
@click.option("--json/--plain", "as_json", default=False)
def enumerate_cmd(n, variant, pfile, subgroup, strategy, max_cosets,
                  max_memory, lookahead, as_json):
    """Todd-Coxeter coset enumeration; exits 1 on LimitExceeded."""
    if (n is None) == (pfile is None):
        raise click.UsageError("give exactly one of --n or --presentation-file")
    if pfile is not None:
        with open(pfile, encoding="utf-8") as fh:
            p = parse_presentation(fh.read())
    elif variant == "gamma":
        p = build_gamma(n)
    elif variant == "gamma-hat":
        p = build_gamma_hat(n)
    else:
        p = abelianize(build_gamma(n))
    if max_memory is None:
        max_memory = int(os.environ.get(MEMORY_ENV, 6 << 30))
    words = []
    if subgroup and p.symbols is None:
        raise click.UsageError(
            "--subgroup words need a symbol-based presentation")
    if subgroup:
        index_of = {s.entries: g for g, s in enumerate(p.symbols)}
        for w in subgroup:
            gw = parse_word(w, p.n)
            words.append(tuple((index_of[sym.entries], e)
                               for sym, e in gw.letters))
    cfg = EnumerationConfig(strategy=strategy, max_cosets=max_cosets,
                            max_memory=max_memory, lookahead=lookahead)
    result = enumerate_cosets(p, words, cfg)
    _emit({"status": result.status, "index": result.index,
           "defined": result.defined,
           "live": result.live if result.status == "limit-exceeded" else result.index,
           "seconds": round(result.seconds, 3)}, as_json)
    if result.status != "closed":
        sys.exit(1)


if __name__ == "__main__":
    main()
