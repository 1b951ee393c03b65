"""Exception types shared across the package."""


class ElasticaFlowError(Exception):
    """Base class for all package-specific errors."""


class InvalidStateError(ElasticaFlowError):
    """Raised when a field or curve contains non-finite or malformed data."""


class DegenerateGramError(ElasticaFlowError):
    """Gram matrix of the tangent direction is numerically singular.

    Happens for (nearly) constant-angle configurations, which the slack
    condition delta_L > 0 excludes for admissible data.
    """

    def __init__(self, det_value: float, floor: float):
        self.det_value = float(det_value)
        self.floor = float(floor)
        super().__init__(
            f"Gram determinant {det_value:.3e} below floor {floor:.3e}; "
            "tangent direction is (nearly) constant"
        )


class CertificateInvalidError(ElasticaFlowError):
    """Determinant lower-bound certificate hypotheses are not met."""


class InstabilityError(ElasticaFlowError):
    """Explicit time step exceeds the diffusive stability limit."""

    def __init__(self, dt: float, limit: float):
        self.dt = float(dt)
        self.limit = float(limit)
        super().__init__(f"dt = {dt:.3e} exceeds stability limit h^2/2 = {limit:.3e}")


class IncompatibleInitialDataError(ElasticaFlowError):
    """Initial data violates the hinged compatibility or constraint tolerance."""


class PresetInfeasibleError(ElasticaFlowError):
    """Initial-data preset could not be fitted to the endpoint constraint."""


class ManifestError(ElasticaFlowError):
    """Run manifest is missing, ill-typed, or inadmissible."""


class NoContractionError(ElasticaFlowError):
    """Picard iteration failed to contract; a smaller time horizon is needed."""


class SolverFailureError(ElasticaFlowError):
    """Internal solver breakdown (should not occur for admissible inputs)."""
