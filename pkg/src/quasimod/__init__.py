"""Finite quasigroup and loop computation.

Cayley-table quasigroups and loops, F-quasigroup laws, nucleus / Moufang
center / center / m-set machinery, NK-loops, endomorphism rings and their
distinguished classes, sparse polynomial scalars, generalized modules, and
the constructive equivalence between pointed F-quasigroups and nuclearly
pointed modules.
"""

from .cayley import (
    LoopTable,
    QuasigroupTable,
    alpha_beta,
    f_quasigroup_violation,
    is_commutative,
    is_diassociative,
    is_f_quasigroup,
    is_loop,
    is_moufang,
    parse_pointed_table,
    parse_table,
    power,
    serialize_table,
)
from .corpus import (
    chein12,
    chein_loop,
    cml81,
    corpus_tables,
    cyclic_table,
    dihedral_table,
    direct_product,
    enumerate_forms,
    group_tables,
    neutral_loops,
    quaternion_table,
    search_f_quasigroups,
)
from .endo import (
    central_endomorphisms,
    check_lemma_suite,
    condition_f_endomorphisms,
    delta_map,
    endo_add,
    endo_compose,
    endo_neg,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    is_automorphism,
    is_central,
    is_endomorphism,
    is_quasicentral,
    is_special,
    quasicentral_endomorphisms,
    quasicentral_witnesses,
    satisfies_condition_f,
    special_endomorphisms,
)
from .equivalence import (
    ArithmeticForm,
    PointedFQ,
    build_fq,
    check_fm_mc,
    form_report,
    module_from_form,
    recover_form,
    recover_form_candidates,
    rho,
    roundtrip_fq,
    roundtrip_fq_report,
    roundtrip_module,
    roundtrip_module_report,
    sigma,
    sigma_form,
    validate_form,
)
from .errors import QuasimodError
from .genmodule import (
    GenModule,
    PointedGenModule,
    annihilator_contains,
    is_centrally_pointed,
    is_class_m,
    is_nuclearly_pointed,
    parse_module,
    scalar_mul,
    serialize_module,
    verify_class_m,
    verify_module_axioms,
)
from .polyring import Poly, evaluate, format_poly, generators, parse_poly
from .structure import (
    center,
    commutant,
    inner_mappings,
    is_a_loop,
    is_nk_loop,
    is_normal_subloop,
    m_set,
    moufang_center,
    multiplication_group,
    nk_decomposition,
    nucleus,
    quotient,
    subloop,
    verify_nk_facts,
)

__version__ = "0.1.0"
