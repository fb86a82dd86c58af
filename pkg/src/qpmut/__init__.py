"""qpmut: mutation of graded quivers with potential, truncated Jacobian
algebras, and tilt computations for algebras of small global dimension."""

from importlib import resources

from .core import (DEFAULT_BOUND, Arrow, Path, PathPoly, Quiver, compose,
                   substitute, validate_quiver)
from .cuts import (classify_vertex, cut_from_grading, grading_from_cut,
                   qp_from_algebra, truncated_jacobian, validate_cut)
from .errors import (AnalysisError, ChainError, CompositionError, CutError,
                     GradingError, HypothesisError, MutationError, ParseError,
                     PotentialError, PresentationError, QPError, SplitError,
                     SubstitutionError, TiltingError)
from .mutation import (MutationStep, SplitResult, destar, graded_premutate,
                       mutate, premutate, split)
from .potential import (GradedQP, canonicalize_potential, cyclic_derivative,
                        homogeneity_degree, left_derivative, partial_derivative,
                        right_derivative)
from .presentation import (AlgebraPresentation, Relation, destar_presentation,
                           opposite, presentations_equivalent)
from .tilting import (AprTiltResult, MutationTrace, apr_tilt, apr_tilt_detailed,
                      complete_3_preprojective, mutation_chain)

__version__ = "0.1.0"


def example_names() -> list[str]:
    """Names of the bundled example documents."""
    root = resources.files(__name__) / "data"
    return sorted(f.name[:-3] for f in root.iterdir() if f.name.endswith(".qp"))


def load_example(name: str) -> str:
    """Text of a bundled example document (without the .qp suffix)."""
    path = resources.files(__name__) / "data" / f"{name}.qp"
    if not path.is_file():
        raise QPError(f"no bundled example named {name!r}")
    return path.read_text(encoding="utf-8")
