"""
braidclass: Garside normal forms in the braid groups B_n and a polynomial-time
classifier deciding whether a braid is periodic, reducible or pseudo-Anosov.
"""

from __future__ import annotations

from .braid_core import (
    BraidWord,
    LatticeSide,
    PermutationBraid,
    all_permutation_braids,
    complement,
    delta,
    is_prefix,
    join,
    meet,
    permutation_braid_to_word,
    tau,
    word_to_permutation_braid,
)
from .conjugacy import (
    ConjugationRecord,
    RigidConjugators,
    cycle_to_rigid,
    cycling,
    decycling,
    garside_length,
    is_i_rigid,
    is_rigid,
    is_tame_up_to,
    iterated_cycling_to_rigid,
    minimal_rigid_conjugators,
    sss_representative,
)
from .errors import BraidError
from .normal_form import (
    WeightedForm,
    conjugate,
    conjugate_by_simple,
    inverse,
    mul,
    normalize,
    power,
)
from .reducibility import (
    CircleOrbit,
    Classification,
    ClassifierConfig,
    ReductionTree,
    StandardCircle,
    Verdict,
    classify,
    find_tame_power,
    reduction_tree,
    split_along_orbit,
    standard_circle_orbit,
)

__all__ = [
    "BraidWord",
    "LatticeSide",
    "PermutationBraid",
    "all_permutation_braids",
    "complement",
    "delta",
    "is_prefix",
    "join",
    "meet",
    "permutation_braid_to_word",
    "tau",
    "word_to_permutation_braid",
    "ConjugationRecord",
    "RigidConjugators",
    "cycle_to_rigid",
    "cycling",
    "decycling",
    "garside_length",
    "is_i_rigid",
    "is_rigid",
    "is_tame_up_to",
    "iterated_cycling_to_rigid",
    "minimal_rigid_conjugators",
    "sss_representative",
    "BraidError",
    "WeightedForm",
    "conjugate",
    "conjugate_by_simple",
    "inverse",
    "mul",
    "normalize",
    "power",
    "CircleOrbit",
    "Classification",
    "ClassifierConfig",
    "ReductionTree",
    "StandardCircle",
    "Verdict",
    "classify",
    "find_tame_power",
    "reduction_tree",
    "split_along_orbit",
    "standard_circle_orbit",
]
