"""Exact computer algebra for the level-zero module of the loop algebra of
sl(2): generator actions, symmetric-function layer realizations, singular
vectors, and the exponential-sum quotient modules."""

from .expmod import (ExpFunction, InducedElement, PolyModElement,
                     are_isomorphic, avoids_top_window, component_dim,
                     cyclicity_check, image_period, induced_act,
                     induced_act_word, make_induced, phi_eval,
                     polymod_act_h, quotient_map, top_layer)
from .loopmod import (FormalEElement, ModuleElement, act_e, act_f, act_h,
                      act_word, formal_e, generator, graded_degree,
                      homogeneous_layer, is_singular, layer_decompose,
                      make_element, monomial, pbw_oracle, witness_index)
from .realization import (RequiresExtensionError, TLaurent, apply_sym,
                          classify_hom, elem_sym_values, eval_eta,
                          graded_image_period, psi, theta, theta_inv,
                          tlaurent_monomial)
from .singular import (ScanRow, Window, build_singular, conjecture_scan,
                       discriminant_image_space, singular_space,
                       theta_divisibility, verify_span_identity,
                       window_monomials)
from .symlaurent import (LaurentElement, NotDivisibleError,
                         NotSymmetricError, SymElement, discriminant,
                         divide_exact, elem_sym, expand, lambda_poly,
                         laurent_mul, make_sym, power_sum, sym_index,
                         sym_mul, sym_one, symmetrize)

__version__ = "0.1.0"
