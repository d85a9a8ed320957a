"""Independent checking and rendering of safe-pair induction proofs.

check_proof re-derives everything it needs (the scaled morphisms f^p, g^q
included) from the proof's stored base problem, so it accepts or rejects a
certificate on its own authority; the prover is never consulted.  Renderers
refuse proofs that do not pass the checker and otherwise emit a fixed,
deterministic document: scaling announcements, the claim, the numbered
simultaneous properties, the n=0 basis, one induction-step block per pair,
and a closing line, with one blank line between blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .prover import Proof
from .words import Morphism, format_word

CONDITIONS = ("coding-eq", "f-decomposition", "g-decomposition", "start-symbol", "nonempty")


@dataclass(frozen=True)
class Violation:
    condition: str
    pair: int
    detail: str


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    violations: tuple[Violation, ...]


def check_proof(proof: Proof) -> CheckReport:
    """Verify every induction-proof obligation of the table; report all failures."""
    problem = proof.problem
    fp = proof.scaled_f
    gq = proof.scaled_g
    pairs = proof.table.pairs
    decomps = proof.table.decompositions
    n = len(pairs)
    violations: list[Violation] = []

    for i, (u, v) in enumerate(pairs):
        if len(u) == 0 or len(v) == 0:
            violations.append(Violation("nonempty", i, "empty word in pair"))

    for i, (u, v) in enumerate(pairs):
        if problem.tau.apply(u) != problem.rho.apply(v):
            violations.append(
                Violation("coding-eq", i, "coded words of the pair differ")
            )

    for i, ((u, v), w) in enumerate(zip(pairs, decomps)):
        if any(not 0 <= j < n for j in w):
            violations.append(
                Violation("f-decomposition", i, "decomposition index out of range")
            )
            continue
        if fp.apply(u) != tuple(s for j in w for s in pairs[j][0]):
            violations.append(
                Violation("f-decomposition", i, "f-image does not match the index word")
            )
        if gq.apply(v) != tuple(s for j in w for s in pairs[j][1]):
            violations.append(
                Violation("g-decomposition", i, "g-image does not match the index word")
            )

    u0, v0 = pairs[0]
    if not (len(u0) > 0 and u0[0] == 0 and len(v0) > 0 and v0[0] == 0):
        violations.append(
            Violation("start-symbol", 0, "first pair does not start both fixed points")
        )

    return CheckReport(len(violations) == 0, tuple(violations))


def _images_text(name: str, m: Morphism) -> str:
    return ", ".join(f"{name}({a}) = {format_word(im)}" for a, im in enumerate(m.images))


def _require_checked(proof: Proof) -> None:
    report = check_proof(proof)
    if not report.ok:
        first = report.violations[0]
        raise ValueError(
            f"refusing to render: proof fails checking "
            f"({first.condition} on pair {first.pair})"
        )


def _blocks(proof: Proof, latex: bool) -> list[str]:
    fp = proof.scaled_f
    gq = proof.scaled_g
    tau = proof.problem.tau
    pairs = proof.table.pairs
    decomps = proof.table.decompositions

    if latex:
        t, r = "\\tau", "\\rho"
        n_now, n_zero, n_next, inf = "^n", "^0", "^{n+1}", "^\\infty"
        lead = "\\noindent "
    else:
        t, r = "τ", "ρ"
        n_now, n_zero, n_next, inf = "^n", "^0", "^(n+1)", "^∞"
        lead = ""

    def math(s: str) -> str:
        return f"${s}$" if latex else s

    def tf(power: str, w: str) -> str:
        return f"{t}(f{power}({w}))"

    def rg(power: str, w: str) -> str:
        return f"{r}(g{power}({w}))"

    def replace_block(name: str, k: int, m: Morphism) -> str:
        images = _images_text(name, m)
        if latex:
            return f"{lead}Replace ${name}$ by ${name}^{k}$:\n${images}$."
        return f"Replace {name} by {name}^{k}:\n{images}."

    blocks: list[str] = []
    if proof.p > 1:
        blocks.append(replace_block("f", proof.p, fp))
    if proof.q > 1:
        blocks.append(replace_block("g", proof.q, gq))

    claim = f"{tf(inf, '0')} = {rg(inf, '0')}"
    blocks.append(f"{lead}Claim to be proved: {math(claim)}.")

    noun = "property" if len(pairs) == 1 else "properties"
    induction_on = math("n")
    blocks.append(
        f"{lead}We will prove the following {len(pairs)} {noun} "
        f"simultaneously by induction on {induction_on}."
    )

    for i, (u, v) in enumerate(pairs):
        prop = f"{tf(n_now, format_word(u))} = {rg(n_now, format_word(v))}"
        blocks.append(f"({i}) {math(prop)}.")

    blocks.append(f"{lead}Then our claim follows from (0).")

    blocks.append(f"{lead}Basis {math('n=0')} of induction:")
    for u, v in pairs:
        coded = format_word(tau.apply(u))
        basis = f"{tf(n_zero, format_word(u))} = {coded} = {rg(n_zero, format_word(v))}"
        blocks.append(f"{math(basis)}.")
    blocks.append(f"{lead}Basis of induction proved.")

    for i, ((u, v), w) in enumerate(zip(pairs, decomps)):
        blocks.append(f"{lead}Induction step part ({i}):")
        fu = format_word(fp.apply(u))
        gv = format_word(gq.apply(v))
        uw = format_word(u)
        vw = format_word(v)
        opening = f"{tf(n_next, uw)} = {tf(n_now, f'f({uw})')} = {tf(n_now, fu)}"
        blocks.append(f"${opening} = $" if latex else f"{opening} =")
        lhs = " ".join(tf(n_now, format_word(pairs[j][0])) for j in w)
        hyp = "(by induction hypothesis)"
        blocks.append(f"${lhs} =$ {hyp}" if latex else f"{lhs} = {hyp}")
        rhs = " ".join(rg(n_now, format_word(pairs[j][1])) for j in w)
        blocks.append(f"${rhs} = $" if latex else f"{rhs} =")
        closing = f"{rg(n_now, gv)} = {rg(n_now, f'g({vw})')} = {rg(n_next, vw)}."
        blocks.append(math(closing))

    blocks.append(f"{lead}Induction step proved, hence claim proved.")
    return blocks


def render_text(proof: Proof) -> str:
    """Plain-text proof document; requires the proof to pass check_proof."""
    _require_checked(proof)
    return "\n\n".join(_blocks(proof, latex=False)) + "\n"


def render_latex(proof: Proof) -> str:
    """LaTeX body fragment of the proof; requires the proof to pass check_proof."""
    _require_checked(proof)
    return "\n\n".join(_blocks(proof, latex=True)) + "\n"
