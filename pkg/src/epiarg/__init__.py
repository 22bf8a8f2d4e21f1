"""Epistemic and argument Kripke models with two-way generation.

The library pairs two finite model classes over a shared signature: worlds
with agent indistinguishability and a valuation on one side, arguments with
proposition-indexed attacks and agent availability on the other.  Each side
generates the other: world sets become arguments attacking by disagreement,
and ultrafilters of the argument strength order become worlds again.  The
harness verifies that restricted knowledge formulas keep their truth value
across the round trip.
"""

from .errors import (
    BindingError,
    FormulaSyntaxError,
    ModelFormatError,
    SizeCapExceeded,
    TrivialModelError,
)
from .formula import (
    ARGUMENT,
    EPISTEMIC,
    And,
    AttackBox,
    Avail,
    Formula,
    Knows,
    Not,
    Prop,
    check_binding,
    enumerate_restricted,
    is_restricted,
    kind_of,
    parse_formula,
    print_formula,
    restricted_atoms,
    rewrite_formula,
)
from .generation import (
    AttackStrength,
    GeneratedArgumentModel,
    GeneratedEpistemicModel,
    generate_argument_model,
    generate_epistemic_model,
    normalize,
    principal_ultrafilter,
    subset_id,
    ultrafilter_id,
)
from .harness import (
    DualityReport,
    FormulaVerdict,
    LemmaCheck,
    LemmaSuiteReport,
    RandomArgumentSpec,
    RandomModelSpec,
    duality_check,
    lemma_suite,
    oracle_ultrafilters,
    random_argument_corpus,
    random_argument_model,
    random_epistemic_corpus,
    random_epistemic_model,
    render_duality_text,
)
from .modelio import (
    ModelDocument,
    document_from_dict,
    document_to_dict,
    load_model_file,
    write_model_file,
)
from .models import (
    ArgumentModel,
    EpistemicModel,
    PointedArgumentModel,
    PointedEpistemicModel,
    Signature,
    ValidationReport,
    Violation,
    validate_argument,
    validate_epistemic,
)
from .semantics import eval_argument, eval_batch, eval_epistemic
from .order import (
    ArgumentSet,
    Preorder,
    classify_set,
    compute_preorder,
    enumerate_ultrafilters,
    hasse_edges,
    is_trivial,
    quotient_classes,
)

__version__ = "0.1.0"
