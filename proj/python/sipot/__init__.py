"""Shape-invariant potentials: algebraic spectra, finite-difference checks, ladder
algebras and point canonical transformations."""

from ._sipot import (
    ArgumentError,
    DomainError,
    DomainSpec,
    Grid,
    LadderExhaustedError,
    Model,
    NoBoundStateError,
    Potential,
    SingularMapError,
    SipotError,
    TruncationTooLargeError,
    UnsupportedParameterError,
    __version__,
    algebraic_levels,
    classify_algebra,
    compare_spectra,
    eigenstate,
    fit_image,
    ladder_matrices,
    model,
    model_names,
    morse_printed_remainder,
    oracle_grid,
    potential,
    potential_names,
    run_acceptance,
    run_criterion,
    solve_bound_states,
    transform_potential,
    wavefunction_grid,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
