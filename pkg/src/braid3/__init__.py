"""Exact 3-braid flype calculus, braid conjugacy, and knot polynomial fingerprints."""

from .words import (
    BraidLetter,
    BraidWord,
    BraidWordError,
    Permutation,
    component_count,
    concat,
    cyclic_rotate,
    exponent_sum,
    free_reduce,
    inverse,
    parse_word,
    permutation,
    self_linking,
    stabilize,
)
from .laurent import LaurentPolynomial
from .garside import (
    GarsideNormalForm,
    conjugate_test,
    cycling,
    decycling,
    normal_form,
    super_summit_set,
    to_word,
    words_equal,
)
from .flype import (
    BelowIndex3,
    FlypePair,
    FlypeTriple,
    UniqueClassWithinBound,
    bennequin,
    braid_crossing_number,
    canonical_rep,
    classify,
    detect_flype,
    flype_partner,
    flype_word,
    is_admissible,
    lemma1_orbit,
)
from .invariants import (
    Fingerprint,
    alexander,
    fingerprint,
    jones,
    kauffman_bracket,
    reduced_burau,
    tl_bracket,
)
from .atlas import (
    AtlasRow,
    attach_names,
    build_atlas,
    enumerate_admissible,
    export,
    load_reference_table,
    verify_table1,
)

__version__ = "0.1.0"
