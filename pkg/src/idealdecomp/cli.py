"""``ideal`` command-line tool.

Exit codes: 0 success (or composite, for ``prime``), 1 I/O or format error,
2 not an ideal, 3 prime for the requested mode, 4 component too large,
5 language mismatch, 6 no witness (input is not inter-prime).
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from . import __version__
from .automata import (
    Mode,
    equivalent,
    is_linear,
    is_minimal,
    is_partially_ordered,
    minimize,
    nontrivial_cycle,
    product,
    ranks,
    trim_check,
)
from .errors import (
    AlphabetMismatch,
    DampingPresent,
    EmptyLanguage,
    FormatError,
    NonLinearInput,
    NotIdeal,
    PrimeInput,
    UnknownLetter,
)
from .ideals import check_ideal, gen_fig6, lmin, power, principal_automaton, shuffle_ideal
from .inter import damping_scan, decompose_inter, decompose_inter_recursive, is_inter_prime, witness
from .io import (
    SCHEMA_VERSION,
    decomposition_to_json,
    dumps_automaton,
    dumps_decomposition,
    load_automaton,
    load_wordset,
    to_dot,
)
from .union import accel_scan, decompose_union, is_union_prime

EXIT_OK = 0
EXIT_IO = 1
EXIT_NOT_IDEAL = 2
EXIT_PRIME = 3
EXIT_SIZE = 4
EXIT_MISMATCH = 5
EXIT_NO_WITNESS = 6


class Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _say_error(message: str, as_json: bool, **extra):
    if as_json:
        click.echo(json.dumps({"schema": SCHEMA_VERSION, "error": message, **extra}))
    else:
        click.echo(f"error: {message}", err=True)


def _fail(code: int, message: str, as_json: bool = False, **extra):
    _say_error(message, as_json, **extra)
    raise Exit(code)


def handled(fn):
    """Translate library errors into exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        as_json = kwargs.get("as_json", False)
        try:
            return fn(*args, **kwargs)
        except Exit as e:
            sys.exit(e.code)
        except (OSError, FormatError, UnknownLetter, AlphabetMismatch) as e:
            _report(EXIT_IO, str(e), as_json)
        except NotIdeal as e:
            _report(EXIT_NOT_IDEAL, str(e), as_json, certificate={"word": e.word, "upper": e.upper})
        except EmptyLanguage as e:
            _report(EXIT_NOT_IDEAL, str(e), as_json)
        except PrimeInput as e:
            _report(EXIT_PRIME, str(e), as_json)

    return wrapper


def _report(code, message, as_json, **extra):
    _say_error(message, as_json, **extra)
    sys.exit(code)


def _emit(as_json: bool, payload: dict, text: str):
    if as_json:
        click.echo(json.dumps({"schema": SCHEMA_VERSION, **payload}))
    else:
        click.echo(text)


def _write(text: str, out: str | None):
    if out is None or out == "-":
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


json_flag = click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
mode_option = click.option(
    "--mode", type=click.Choice(["inter", "union"]), default="inter", show_default=True
)


@click.group()
@click.version_option(__version__)
def main():
    """Decide primality of ideal automata and decompose them."""


@main.command()
@click.argument("file", type=click.Path())
@json_flag
@handled
def check(file, as_json):
    """Validate FILE and report trimness, minimality, ideal-ness, linearity and ranks."""
    a = load_automaton(file)
    trim = trim_check(a)
    report = {
        "states": a.n_states,
        "alphabet": list(a.alphabet),
        "trim": trim.ok,
        "minimal": is_minimal(a),
        "partially_ordered": is_partially_ordered(a),
    }
    if report["partially_ordered"]:
        report["ranks"] = [ranks(a)[q] for q in a.states]
        report["linear"] = bool(is_linear(a))
    else:
        report["cycle"] = nontrivial_cycle(a)
    try:
        ia = check_ideal(a)
        report.update(ideal=True, minimal_states=ia.state_count)
    except NotIdeal as e:
        report.update(ideal=False, certificate={"word": e.word, "upper": e.upper})
    except EmptyLanguage:
        report.update(ideal=False, certificate=None, empty=True)

    lines = [f"{k}: {v}" for k, v in report.items() if k not in ("ranks", "certificate")]
    if "ranks" in report:
        lines.append("ranks: " + ",".join(map(str, report["ranks"])))
    if report.get("certificate"):
        c = report["certificate"]
        lines.append(f"certificate: {c['word']!r} accepted, {c['upper']!r} rejected")
    _emit(as_json, report, "\n".join(lines))
    if not report["ideal"]:
        raise Exit(EXIT_NOT_IDEAL)


@main.command(name="minimize")
@click.argument("file", type=click.Path())
@click.option("-o", "--out", type=click.Path(), default=None)
@handled
def minimize_cmd(file, out):
    """Write the canonical minimal automaton of FILE."""
    _write(dumps_automaton(minimize(load_automaton(file))), out)


@main.command(name="lmin")
@click.argument("file", type=click.Path())
@json_flag
@handled
def lmin_cmd(file, as_json):
    """List the subword-minimal words of the ideal recognized by FILE."""
    words = list(lmin(check_ideal(load_automaton(file))))
    _emit(as_json, {"lmin": words}, "\n".join(w or "ε" for w in words))


@main.command()
@click.argument("file", type=click.Path())
@mode_option
@click.option("--recursive", is_flag=True, help="Intersection mode: split down to primes.")
@click.option("--no-verify", is_flag=True, help="Skip the equivalence check of the result.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False), default=None)
@click.option("--dot", is_flag=True, help="Also write a DOT file per component.")
@json_flag
@handled
def decompose(file, mode, recursive, no_verify, out_dir, dot, as_json):
    """Decompose FILE into smaller automata recognizing ideals."""
    ia = check_ideal(load_automaton(file))
    verify = not no_verify
    if mode == "union":
        dec = decompose_union(ia, verify)
    elif recursive:
        if is_inter_prime(ia):
            raise PrimeInput("automaton is prime for intersection")
        dec = decompose_inter_recursive(ia, verify)
    else:
        dec = decompose_inter(ia, verify)

    if out_dir is not None:
        target = Path(out_dir)
        target.mkdir(parents=True, exist_ok=True)
        (target / "decomposition.json").write_text(dumps_decomposition(dec), encoding="utf-8")
        for i, comp in enumerate(dec.components):
            (target / f"component_{i}.json").write_text(dumps_automaton(comp.dfa), encoding="utf-8")
            if dot:
                (target / f"component_{i}.dot").write_text(to_dot(comp.dfa, f"C{i}"), encoding="utf-8")

    payload = decomposition_to_json(dec)
    payload["count"] = len(dec)
    payload["raw_count"] = dec.raw_count
    text = [f"{mode}: {len(dec)} components, verified: {str(dec.verified).lower()}"]
    text += [f"  {c.tag}: {c.dfa.n_states} states" for c in dec.components]
    _emit(as_json, payload, "\n".join(text))


@main.command()
@click.argument("file", type=click.Path())
@mode_option
@json_flag
@handled
def prime(file, mode, as_json):
    """Print whether FILE is prime; exit 3 if prime, 0 if composite."""
    ia = check_ideal(load_automaton(file))
    linear = is_linear(ia.dfa)
    if mode == "inter":
        verdict = is_inter_prime(ia)
        if not linear:
            reason = {"nonlinear": list(linear.certificate.payload)}
            detail = "not linear: states {} and {} are incomparable".format(*linear.certificate.payload)
        else:
            ks = damping_scan(ia).damping_indices
            reason = {"damping": ks}
            detail = f"damping between q{ks[0] - 1},q{ks[0]}" if ks else "linear, no damping pattern"
    else:
        verdict = is_union_prime(ia)
        if not linear:
            reason = {"nonlinear": list(linear.certificate.payload)}
            detail = "not linear: states {} and {} are incomparable".format(*linear.certificate.payload)
        else:
            idx = accel_scan(ia).accelerating_indices
            reason = {"accelerating": idx}
            detail = f"accelerating at q{idx[0]}" if idx else "linear, no accelerating pattern"
    word = "prime" if verdict else "composite"
    _emit(as_json, {"mode": mode, "prime": verdict, "reason": reason}, f"{word}: {detail}")
    if verdict:
        raise Exit(EXIT_PRIME)


@main.command(name="witness")
@click.argument("file", type=click.Path())
@json_flag
@handled
def witness_cmd(file, as_json):
    """Print a word proving that FILE is prime for intersection."""
    ia = check_ideal(load_automaton(file))
    try:
        w = witness(ia)
    except (DampingPresent, NonLinearInput) as e:
        _fail(EXIT_NO_WITNESS, f"no witness: {e}", as_json)
    _emit(
        as_json,
        {"factors": list(w.factors), "word": w.word},
        f"factors: {' '.join(w.factors) or 'ε'}\nword: {w.word or 'ε'}",
    )


@main.command()
@click.option("--family", type=click.Choice(["fig6", "power", "principal", "shuffle"]), required=True)
@click.option("-n", type=int, default=None, help="Size parameter for fig6 and power.")
@click.option("--base", type=click.Path(), default=None, help="Base automaton for power.")
@click.option("--word", default=None, help="Generator word for principal.")
@click.option("--words", default=None, help="Comma-separated generators for shuffle.")
@click.option("--words-file", type=click.Path(), default=None, help="Word list file for shuffle.")
@click.option("--alphabet", default=None, help="Letters, e.g. abc.")
@click.option("-o", "--out", type=click.Path(), default=None)
@handled
def gen(family, n, base, word, words, words_file, alphabet, out):
    """Generate a fixture automaton."""
    if family == "fig6":
        if n is None or n < 1:
            _fail(EXIT_IO, "fig6 needs -n >= 1")
        d = gen_fig6(n).dfa
    elif family == "power":
        if n is None or n < 1 or base is None:
            _fail(EXIT_IO, "power needs --base FILE and -n >= 1")
        d = power(check_ideal(load_automaton(base)), n).dfa
    elif family == "principal":
        if word is None:
            _fail(EXIT_IO, "principal needs --word")
        d = principal_automaton(word, alphabet or word)
    else:
        if words_file is not None:
            ws = load_wordset(words_file)
            d = shuffle_ideal(ws, alphabet).dfa
        elif words is not None:
            d = shuffle_ideal([w.strip() for w in words.split(",")], alphabet).dfa
        else:
            _fail(EXIT_IO, "shuffle needs --words or --words-file")
    _write(dumps_automaton(d), out)


@main.command()
@click.argument("original", type=click.Path())
@click.argument("components", type=click.Path(), nargs=-1, required=True)
@mode_option
@json_flag
@handled
def verify(original, components, mode, as_json):
    """Check that COMPONENTS are smaller than ORIGINAL and combine to its language."""
    a = load_automaton(original)
    size = minimize(a).n_states
    parts = [load_automaton(p) for p in components]
    big = [str(p) for p, d in zip(components, parts) if d.n_states >= size]
    if big:
        _fail(EXIT_SIZE, f"components not smaller than {size} states: {', '.join(big)}", as_json)
    ok, cert = equivalent(product(Mode(mode), parts), a)
    if not ok:
        _fail(EXIT_MISMATCH, f"languages differ on {cert}", as_json, counterexample=cert.payload)
    _emit(as_json, {"ok": True, "mode": mode}, "OK")


@main.command(name="export-dot")
@click.argument("file", type=click.Path())
@click.option("-o", "--out", type=click.Path(), default=None)
@click.option("--name", default="A", show_default=True)
@handled
def export_dot(file, out, name):
    """Write FILE as a Graphviz digraph."""
    _write(to_dot(load_automaton(file), name), out)

