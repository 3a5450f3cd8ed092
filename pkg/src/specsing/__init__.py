"""specsing: finite-N correlation kernels and spectral densities of the
circular Jacobi beta-ensemble, their confluent hypergeometric scaled limits,
and explicit 1/N (and 1/N^2) correction terms, with numerical verification
of the derivative-form correction structure and tuned-scaling convergence.
"""
from .asymptotics import (ResidualReport, fit_loglog, intermediate_expansion_check,
                          kernel_residual_scan, tuned_scaling_residual)
from .density import (DensityTilde, MorrisParams, density_expansion_check,
                      i_integral, morris_closed, morris_quadrature, rho_finite,
                      rho_limit)
from .jack import (Partition, duality_ratio_2f1, gen_pochhammer, hyper_pfq_alpha,
                   jack_principal, partitions_up_to)
from .kernels import (SkewConstants, correlation_det, kernel_s1, kernel_s1_scaled,
                      kernel_s2, kernel_s2_scaled, kernel_s4, kernel_s4_scaled,
                      kernel_scaled, skew_constants, tail_integral)
from .limits import (ConfluentBlock, KernelExpansion, a_confluent, c_tilde,
                     derivative_identity_residual, j_blocks, k_limit,
                     kernel_expansion, l1, l2)
from .polynomials import (CauchyWeightParams, EnsembleParams, cayley_to_circle,
                          circle_to_cayley, orthogonality_check, rr_norm, rr_poly,
                          rr_scaled, scaled_point_map, weight_cauchy,
                          weight_circle_scaled)
from .quadrature import QuadratureRule, tanh_sinh_rule
from .series import (NonConvergenceError, PoleError, SeriesControl,
                     gamma_ratio_expansion, hyp1f1, hyp2f1_terminating, log_gamma,
                     pochhammer)

__version__ = "0.1.0"

__all__ = [
    "CauchyWeightParams", "ConfluentBlock", "DensityTilde", "EnsembleParams",
    "KernelExpansion", "MorrisParams", "NonConvergenceError", "Partition",
    "PoleError", "QuadratureRule", "ResidualReport", "SeriesControl",
    "SkewConstants", "a_confluent", "c_tilde", "cayley_to_circle",
    "circle_to_cayley", "correlation_det", "density_expansion_check",
    "derivative_identity_residual", "duality_ratio_2f1", "fit_loglog",
    "gamma_ratio_expansion", "gen_pochhammer", "hyp1f1", "hyp2f1_terminating",
    "hyper_pfq_alpha", "i_integral", "intermediate_expansion_check",
    "j_blocks", "jack_principal", "k_limit", "kernel_expansion",
    "kernel_residual_scan", "kernel_s1", "kernel_s1_scaled", "kernel_s2",
    "kernel_s2_scaled", "kernel_s4", "kernel_s4_scaled", "kernel_scaled",
    "l1", "l2", "log_gamma", "morris_closed", "morris_quadrature",
    "orthogonality_check", "partitions_up_to", "pochhammer", "rho_finite",
    "rho_limit", "rr_norm", "rr_poly", "rr_scaled", "scaled_point_map",
    "skew_constants", "tail_integral", "tanh_sinh_rule",
    "tuned_scaling_residual", "weight_cauchy", "weight_circle_scaled",
]
