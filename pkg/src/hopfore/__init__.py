"""Exact computational algebra for Hopf-Ore extensions of abelian group
algebras: rank classification, rank-one pointed quotients, and their
finite-dimensional and weight-module representation theory."""

from .fields import (CyclotomicField, ExtensionField, Field, FieldElement,
                     FieldError, PrimeField, RationalField, cyclotomic,
                     ext_field, gaussian_vanishing,
                     gaussian_vanishing_closed_form, make_field, mult_order,
                     prime_field, q_binomial, q_factorial, q_integer,
                     rationals)
from .groups import (AbelianGroup, Character, CharacterClass, Cocycle,
                     GroupElement, GroupError, character_order, class_of,
                     descend_character, enumerate_characters, make_cocycle,
                     quotient_by_cyclic, same_class)
from .hopf import (Case, CheckReport, HElement, HopfError, HopfOre,
                   TensorElement, check_grading, check_hopf_axioms,
                   coproduct_closed_form, format_element,
                   frobenius_difference_formula, frobenius_power_formula,
                   make_hopf_ore, validate_ore_compat)
from .modules import (BlockS, ModuleError, ModuleRep, OneDim,
                      SimpleClassification, Verdict, classify_simples,
                      cyclic_cover_check, decompose_tensor, is_indecomposable,
                      is_isomorphic, is_simple, module_character, module_homs,
                      realize, submodule_generated, submodule_lattice_chain,
                      tensor_module, validate_module, weight_spaces)
from .structure import (IdealForm, IdealVariant, QuotientHopf, Rank,
                        RankResult, check_hopf_ideal, ideal_form,
                        ideal_form_char_p, ideal_generators_in,
                        is_skew_primitive, make_quotient, rank_crosscheck,
                        rank_of, skew_primitives)
from .verma import (VermaModule, VermaSubmodule, augmentation_submodule,
                    is_maximal, skew_maximal_submodule, verma,
                    verma_quotient_mod_ideal, verma_submodule)

__version__ = "0.1.0"
