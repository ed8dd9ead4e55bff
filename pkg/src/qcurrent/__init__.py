"""q-deformed sl(2) current algebra over the disk, with its coherent-state
representation and a machine-checkable highest-weight verification."""

from .bergman import (BergmanOperator, BergmanVector, GroupElement2x2,
                      cocycle_vector, constant_vector, mobius_operator,
                      seeded_pseudo_unitary, tail_estimate,
                      verify_cocycle_identity, verify_homomorphism,
                      verify_unitary)
from .config import RunConfig
from .current import (CurrentElement, DiskMesh, GroupCurrent, TestFunction,
                      build_classical_generators, build_center_current,
                      build_deformed_generators, build_disk_mesh,
                      deform_current, exp_current, test_function_preset)
from .directint import (DirectIntegralOperator, DirectIntegralVector,
                        lift_cocycle, lift_operator, nu, nu_finite_difference,
                        phi, theta, theta_exact)
from .errors import ConfigError, DomainError
from .fock import (CoherentCombo, HighestWeightReport, apply_pi, apply_u,
                   check_highest_weight, dense_crosscheck, isometry_residual,
                   pi_finite_difference, vacuum)
from .highprec import FDScan, fd_consistency_scan
from .irreps import (CommutatorResiduals, SpinIrrep, build_spin_irrep,
                     commutator_residual, deform, q_bracket_of_cartan)
from .qnum import DeformationParam, qnumber, qnumber_direct, qratio, sinh_ratio
from .report import (CheckRecord, ScanRow, ScanTable, SuiteReport, check, info,
                     report_json, write_checks_csv, write_scan_csv)
from .suites import (highest_weight, report_all, seeded_one_particle,
                     seeded_su11_current, verify_algebra, verify_cocycle,
                     verify_rep)

__version__ = "0.1.0"

__all__ = [
    "BergmanOperator", "BergmanVector", "CheckRecord", "CoherentCombo",
    "CommutatorResiduals", "ConfigError", "CurrentElement",
    "DeformationParam", "DirectIntegralOperator", "DirectIntegralVector",
    "DiskMesh", "DomainError", "FDScan", "GroupCurrent", "GroupElement2x2",
    "HighestWeightReport", "RunConfig", "ScanRow", "ScanTable", "SpinIrrep",
    "SuiteReport", "TestFunction", "apply_pi", "apply_u",
    "build_center_current", "build_classical_generators",
    "build_deformed_generators", "build_disk_mesh", "build_spin_irrep",
    "check", "check_highest_weight", "cocycle_vector", "commutator_residual",
    "constant_vector", "deform", "deform_current", "dense_crosscheck",
    "exp_current", "fd_consistency_scan", "highest_weight", "info",
    "isometry_residual", "lift_cocycle", "lift_operator", "mobius_operator",
    "nu", "nu_finite_difference", "phi", "pi_finite_difference",
    "q_bracket_of_cartan", "qnumber", "qnumber_direct", "qratio",
    "report_all", "report_json", "seeded_one_particle", "seeded_pseudo_unitary",
    "seeded_su11_current", "sinh_ratio", "tail_estimate",
    "test_function_preset", "theta", "theta_exact", "vacuum",
    "verify_algebra", "verify_cocycle", "verify_cocycle_identity",
    "verify_homomorphism", "verify_rep", "verify_unitary",
    "write_checks_csv", "write_scan_csv",
]
