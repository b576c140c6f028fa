"""qfaplus configuration."""


class CONF:
    """
    qfaplus configuration class.

    Operations taking a tolerance argument read the corresponding attribute at call time when no value is given,
    so changing an attribute affects every later call.

    Attributes
    ----------
    encoding: str
        encoding used to write machine files
    validation_tol: float
        max-entry deviation accepted by validators (completeness relation, projectors, density operators)
    psd_tol: float
        slack on negative eigenvalues for positivity checks
    probability_tol: float
        acceptance probabilities within this distance of [0, 1] are clamped silently
    probability_error_tol: float
        acceptance probabilities further than this from [0, 1] raise an InternalConsistencyError
    span_tol: float
        residual norm under which a candidate is considered linearly dependent on a basis
    equivalence_tol: float
        threshold on |Tr(P b)| and on counterexample gaps
    margin_slack: float
        float slack used when comparing acceptance values to lambda +/- epsilon
    enumeration_limit: int
        max number of words (all lengths <= k) of exhaustive word enumerations
    output_digits: int
        significant digits of command line numeric output
    file_format_version: int
        machine file version written (and max version read)
    max_workers: int or None
        default number of threads used to evaluate words, None for sequential evaluation
    """

    encoding = "utf-8"
    validation_tol = 1e-9
    psd_tol = 1e-10
    probability_tol = 1e-10
    probability_error_tol = 1e-6
    span_tol = 1e-8
    equivalence_tol = 1e-7
    margin_slack = 1e-12
    enumeration_limit = 10 ** 7
    output_digits = 12
    file_format_version = 1
    max_workers = None
