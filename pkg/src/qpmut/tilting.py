"""The tilt pipeline: from an algebra presentation, build the associated
graded QP with its cut, left-mutate at a source, and read the new
presentation off the truncated Jacobian algebra.  Also iterated mutation
chains through strict sources/sinks and the 3-preprojective presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .analysis import (DEFAULT_CAP, check_algebraic_cut, global_dimension,
                       injective_dimension_of_projective)
from .core import DEFAULT_BOUND, PathPoly, Quiver
from .cuts import (classify_vertex, cut_from_grading, grading_from_cut,
                   qp_from_algebra, truncated_jacobian, validate_cut)
from .errors import AnalysisError, ChainError, HypothesisError, TiltingError
from .mutation import MutationStep, SplitResult, graded_premutate, mutate, split
from .potential import GradedQP
from .presentation import AlgebraPresentation


@dataclass
class AprTiltResult:
    """All intermediate stages of one tilt, for inspection and reporting."""

    source_vertex: str
    input_presentation: AlgebraPresentation
    qp: GradedQP
    cut: frozenset[str]
    premutation: GradedQP
    premutation_cut: frozenset[str]
    split: SplitResult
    reduced_cut: frozenset[str]
    presentation: AlgebraPresentation
    injective_dimension: int | str | None = None


def apr_tilt(p: AlgebraPresentation, k: str, *, bound: int = DEFAULT_BOUND,
             cap: int = DEFAULT_CAP,
             skip_hypothesis_check: bool = False) -> AlgebraPresentation:
    """Presentation of the endomorphism algebra of the tilting module at a
    source ``k`` whose projective is simple and not injective.

    The hypothesis is that P_k has injective dimension at most 2; beyond
    that the formula's output is still emitted under
    ``skip_hypothesis_check`` but is documented as not the endomorphism
    algebra.
    """
    return apr_tilt_detailed(p, k, bound=bound, cap=cap,
                             skip_hypothesis_check=skip_hypothesis_check).presentation


def apr_tilt_detailed(p: AlgebraPresentation, k: str, *, bound: int = DEFAULT_BOUND,
                      cap: int = DEFAULT_CAP,
                      skip_hypothesis_check: bool = False) -> AprTiltResult:
    if k not in p.quiver.vertices:
        raise TiltingError(f"unknown vertex {k!r}")
    if p.quiver.arrows_into(k):
        names = [a.name for a in p.quiver.arrows_into(k)]
        raise TiltingError(f"vertex {k!r} is not a source: arrows {names} end there")
    idim: int | str | None = None
    if not skip_hypothesis_check:
        idim = injective_dimension_of_projective(p, k, cap=max(cap, 3), bound=bound)
        if idim == 0:
            raise TiltingError(
                f"P_{k} is injective, so there is no tilting module at {k!r}")
        if isinstance(idim, str) or idim > 2:
            raise HypothesisError(
                f"P_{k} has injective dimension {idim} > 2; the mutation formula "
                f"would not compute the endomorphism algebra")
    g, cut = qp_from_algebra(p)
    pre = graded_premutate(g, k, "left")
    pre_cut = cut_from_grading(pre)
    parts = split(pre, bound=bound)
    reduced_cut = cut_from_grading(parts.reduced)
    result = truncated_jacobian(parts.reduced, reduced_cut)
    return AprTiltResult(k, p, g, cut, pre, pre_cut, parts, reduced_cut,
                         result, injective_dimension=idim)


@dataclass
class MutationTrace:
    """States of an iterated mutation: the QP and cut after every step,
    with the truncated Jacobian presentation of each state."""

    start: GradedQP
    start_cut: frozenset[str]
    steps: list[MutationStep] = field(default_factory=list)
    states: list[tuple[GradedQP, frozenset[str]]] = field(default_factory=list)
    presentations: list[AlgebraPresentation] = field(default_factory=list)

    @property
    def final(self) -> tuple[GradedQP, frozenset[str]]:
        return self.states[-1] if self.states else (self.start, self.start_cut)


def mutation_chain(g: GradedQP, cut: frozenset[str] | set[str],
                   steps, *, bound: int = DEFAULT_BOUND,
                   cap: int = DEFAULT_CAP,
                   require_algebraic_start: bool = False,
                   check_intermediates: bool = False) -> MutationTrace:
    """Apply mutation steps, each at a strict source (left) or strict sink
    (right) of the current state.

    ``require_algebraic_start`` additionally verifies the starting state is a reduced
    QP with an algebraic cut; ``check_intermediates`` verifies every
    produced state keeps an algebraic cut.
    """
    cut = frozenset(cut)
    report = validate_cut(g, cut)
    if not report.valid:
        raise ChainError(f"starting cut is invalid on terms {report.offending_terms()}")
    if require_algebraic_start:
        start_report = check_algebraic_cut(g, cut, bound=bound, cap=cap)
        if not start_report.reduced_with_algebraic_cut:
            raise ChainError(
                "starting QP is not a reduced QP with an algebraic cut:\n"
                + start_report.summary())
    current = grading_from_cut(g, cut)
    current_cut = cut
    trace = MutationTrace(current, current_cut)
    for idx, step in enumerate(steps, start=1):
        if not isinstance(step, MutationStep):
            step = MutationStep(*step)
        kind = classify_vertex(current, current_cut, step.vertex)
        wanted = "strict_source" if step.side == "left" else "strict_sink"
        if step.side == "ungraded":
            raise ChainError("mutation chains require graded left/right steps")
        if kind != wanted:
            raise ChainError(
                f"step {idx} ({step.vertex}, {step.side}) needs a {wanted} "
                f"but the vertex is classified {kind!r}")
        current = mutate(current, step, bound=bound)
        current_cut = cut_from_grading(current)
        state_report = validate_cut(current, current_cut)
        if not state_report.valid:
            raise ChainError(
                f"step {idx} produced an invalid cut on {state_report.offending_terms()}")
        if check_intermediates:
            acr = check_algebraic_cut(current, current_cut, bound=bound, cap=cap)
            if not acr.reduced_with_algebraic_cut:
                raise ChainError(
                    f"step {idx} left the class of reduced QPs with algebraic cuts:\n"
                    + acr.summary())
        trace.steps.append(step)
        trace.states.append((current, current_cut))
        trace.presentations.append(truncated_jacobian(current, current_cut))
    return trace


def complete_3_preprojective(p: AlgebraPresentation, *, bound: int = DEFAULT_BOUND,
                             cap: int = DEFAULT_CAP) -> tuple[Quiver, PathPoly]:
    """The quiver and potential presenting the completed 3-preprojective
    algebra of a presentation of global dimension at most 2."""
    gldim = global_dimension(p, cap=cap, bound=bound)
    if isinstance(gldim, str) or gldim > 2:
        raise AnalysisError(
            f"global dimension {gldim} exceeds 2; the 3-preprojective "
            f"presentation is only computed below that")
    g, _ = qp_from_algebra(p)
    return g.quiver, g.potential
