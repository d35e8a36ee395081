"""Command-line driver.

Exit codes: 0 success, 1 semantic failure (validation violations), 2 usage or
parse errors.  All probabilities are printed with 12 significant digits and
output is deterministic, so repeated invocations are byte-identical.
"""

from __future__ import annotations

import itertools
import re
import sys
from typing import Iterable

import click

from . import fileformat, zoo
from .automaton import (CounterDomain, GeneralQf1ca, SimpleQf1ca, as_general,
                        validate_structure)
from .dynamics import RunResult, run
from .transforms import UnsupportedAcceptance, eliminate_negative, mo_to_mm
from .wellformed import check_conditions, check_simple, isometry_oracle


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _load(path: str) -> SimpleQf1ca | GeneralQf1ca:
    try:
        return fileformat.load(path)
    except FileNotFoundError:
        _fail(f"no such file: {path}", 2)
    except fileformat.FormatError as exc:
        _fail(str(exc), 2)
    raise AssertionError("unreachable")


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _print_result(r: RunResult) -> None:
    click.echo(f"p_accept {_fmt(r.p_accept)}")
    click.echo(f"p_reject {_fmt(r.p_reject)}")
    click.echo(f"p_residual {_fmt(r.p_residual)}")
    click.echo(f"p_reject_total {_fmt(r.p_reject_total)}")


@click.group()
def main() -> None:
    """Simulate, validate, build and convert quantum one-counter automata."""


@main.command()
@click.argument("file", type=click.Path())
@click.option("--tol", type=float, default=1e-9, show_default=True,
              help="Numerical tolerance for every check.")
@click.option("--strict", is_flag=True,
              help="Evaluate the separability conditions over independent "
                   "counter signs as well.")
@click.option("--oracle-maxlen", type=int, default=None, metavar="K",
              help="Also run the explicit isometry oracle on all words up to "
                   "length K.")
def validate(file: str, tol: float, strict: bool, oracle_maxlen: int | None) -> None:
    """Check structural invariants and well-formedness of an automaton file."""
    a = _load(file)
    g = as_general(a)
    problems = [str(v) for v in validate_structure(g)]
    if isinstance(a, SimpleQf1ca):
        for v in check_simple(a, tol).violations:
            problems.append(f"non-unitary matrix: {v}")
    for v in check_conditions(g, tol, strict=strict).violations:
        problems.append(str(v))
    if oracle_maxlen is not None:
        for word in _all_words(g.alphabet, oracle_maxlen):
            residual = isometry_oracle(g, word, counter_bound=oracle_maxlen + 2)
            if residual > tol:
                problems.append(
                    f"isometry oracle residual {residual:.3e} on word {word!r}")
    if problems:
        for p in problems:
            click.echo(p)
        click.echo(f"FAIL ({len(problems)} violations)")
        sys.exit(1)
    click.echo("OK")


def _all_words(alphabet: Iterable[str], max_len: int) -> Iterable[str]:
    symbols = list(alphabet)
    for length in range(max_len + 1):
        for tup in itertools.product(symbols, repeat=length):
            yield "".join(tup)


@main.command("run")
@click.argument("file", type=click.Path())
@click.argument("word")
@click.option("--trace", is_flag=True, help="Print the superposition after every symbol.")
def run_cmd(file: str, word: str, trace: bool) -> None:
    """Run an automaton on a word and print the outcome probabilities."""
    a = _load(file)
    bad = set(word) - set(a.alphabet)
    if bad:
        _fail(f"word contains symbols outside the alphabet: {sorted(bad)}", 2)
    result = run(a, word, keep_trace=trace)
    if trace:
        for i, step in enumerate(result.trace):
            parts = " ".join(
                f"({c.state},{c.counter}):{amp.real:+.6f}{amp.imag:+.6f}j"
                for c, amp in sorted(step.after))
            click.echo(f"step {i} symbol {step.symbol!r} "
                       f"accepted {_fmt(step.accepted)} rejected {_fmt(step.rejected)} "
                       f"| {parts}")
    _print_result(result)


_PATTERN_TOKEN = re.compile(r"^(?P<symbol>\S)\^(?P<var>[a-zA-Z]\w*)$")


def parse_pattern(pattern: str) -> tuple[list[tuple[str, str | None]], list[str]]:
    """Split a block pattern like "0^a 1 0^b" into (symbol, variable) tokens
    and the ordered list of variables.
    """
    tokens: list[tuple[str, str | None]] = []
    variables: list[str] = []
    for raw in pattern.split():
        m = _PATTERN_TOKEN.match(raw)
        if m:
            tokens.append((m.group("symbol"), m.group("var")))
            if m.group("var") not in variables:
                variables.append(m.group("var"))
        else:
            tokens.append((raw, None))
    return tokens, variables


_RANGE = re.compile(r"^(?P<var>[a-zA-Z]\w*)=(?P<lo>\d+)\.\.(?P<hi>\d+)$")


@main.command()
@click.argument("file", type=click.Path())
@click.argument("pattern")
@click.option("--range", "ranges", multiple=True, metavar="VAR=LO..HI",
              help="Inclusive range for a pattern variable; repeatable.")
@click.option("--out", type=click.Path(), default=None,
              help="Write the CSV here instead of stdout.")
def sweep(file: str, pattern: str, ranges: tuple[str, ...], out: str | None) -> None:
    """Tabulate run probabilities over a family of block words as CSV."""
    a = _load(file)
    tokens, variables = parse_pattern(pattern)
    spans: dict[str, range] = {}
    for raw in ranges:
        m = _RANGE.match(raw)
        if not m:
            _fail(f"bad range {raw!r}, expected VAR=LO..HI", 2)
            return
        lo, hi = int(m.group("lo")), int(m.group("hi"))
        if hi < lo:
            _fail(f"empty-by-inversion range {raw!r}", 2)
        spans[m.group("var")] = range(lo, hi + 1)
    missing = [v for v in variables if v not in spans]
    if missing:
        _fail(f"no range given for variable(s): {', '.join(missing)}", 2)
    lines = [",".join(variables) + ",p_accept,p_reject,p_residual,p_reject_total"
             if variables else "p_accept,p_reject,p_residual,p_reject_total"]
    for values in itertools.product(*(spans[v] for v in variables)):
        env = dict(zip(variables, values))
        word = "".join(symbol * env[var] if var is not None else symbol
                       for symbol, var in tokens)
        r = run(a, word)
        row = [str(v) for v in values]
        row += [_fmt(r.p_accept), _fmt(r.p_reject),
                _fmt(r.p_residual), _fmt(r.p_reject_total)]
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _zoo_builders() -> dict[str, object]:
    return {
        "example3": zoo.build_example3,
        "example4": zoo.build_example4,
        "example5": zoo.build_example5,
        "theorem5": zoo.build_theorem5,
        "theorem6": zoo.build_theorem6_experimental,
    }


@main.command("zoo")
@click.argument("name")
@click.option("--param", "params", multiple=True, metavar="KEY=VALUE",
              help="Builder parameter; repeatable.")
@click.option("--emit", type=click.Path(), default=None,
              help="Write the automaton file here instead of stdout.")
def zoo_cmd(name: str, params: tuple[str, ...], emit: str | None) -> None:
    """Build a catalogued automaton and emit it as an automaton file."""
    builders = _zoo_builders()
    if name not in builders:
        _fail(f"unknown automaton {name!r}; known: {', '.join(sorted(builders))}", 2)
    kwargs: dict[str, str] = {}
    for raw in params:
        key, sep, value = raw.partition("=")
        if not sep:
            _fail(f"bad parameter {raw!r}, expected KEY=VALUE", 2)
        kwargs[key] = value
    try:
        automaton = _build_zoo(name, kwargs)
    except (ValueError, TypeError) as exc:
        _fail(str(exc), 2)
        return
    text = fileformat.emit(automaton)
    if emit is None:
        click.echo(text, nl=False)
    else:
        with open(emit, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_zoo(name: str, params: dict[str, str]) -> SimpleQf1ca:
    if name == "example3":
        variant = params.pop("variant", "int")
        if variant not in ("int", "nonneg"):
            raise ValueError(f"variant must be int or nonneg, got {variant!r}")
        _reject_extras(params)
        return zoo.build_example3(CounterDomain(variant))
    if name == "example4":
        p = params.pop("p", None)
        _reject_extras(params)
        return zoo.build_example4(float(p) if p is not None else None)
    if name == "example5":
        n = params.pop("n", None)
        _reject_extras(params)
        if n is None:
            raise ValueError("example5 needs a path count, e.g. --param n=3")
        return zoo.build_example5(int(n))
    _reject_extras(params)
    if name == "theorem5":
        return zoo.build_theorem5()
    return zoo.build_theorem6_experimental()


def _reject_extras(params: dict[str, str]) -> None:
    if params:
        raise ValueError(f"unknown parameter(s): {', '.join(sorted(params))}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--mo-to-mm", "mode", flag_value="mo_to_mm",
              help="Defer all measurements to the right endmarker's step.")
@click.option("--nonnegative", "mode", flag_value="nonnegative",
              help="Fold the negative counter half-axis away.")
@click.option("--emit", type=click.Path(), default=None,
              help="Write the transformed automaton here instead of stdout.")
def transform(file: str, mode: str | None, emit: str | None) -> None:
    """Apply an equivalence-preserving transform to an automaton file."""
    if mode is None:
        _fail("pick one of --mo-to-mm or --nonnegative", 2)
    g = as_general(_load(file))
    try:
        result: GeneralQf1ca = mo_to_mm(g) if mode == "mo_to_mm" else eliminate_negative(g)
    except (UnsupportedAcceptance, ValueError) as exc:
        _fail(str(exc), 2)
        return
    text = fileformat.emit(result)
    if emit is None:
        click.echo(text, nl=False)
    else:
        with open(emit, "w", encoding="utf-8") as fh:
            fh.write(text)


if __name__ == "__main__":
    main()
