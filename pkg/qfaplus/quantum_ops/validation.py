"""Validation report module."""

import collections

import pandas as pd

from ..exceptions import MachineValidationError


class ValidationReport:
    """
    Report gathering numerical checks performed on an object (operation, state, measurement, machine).

    Parameters
    ----------
    subject: str
        description of the validated object, used in messages

    Attributes
    ----------
    subject: str
    """

    def __init__(self, subject):
        self.subject = subject
        self._checks = []  # [(name, deviation, tolerance, passed, message), ...]

    def add_check(self, name, deviation, tolerance):
        """
        Register a numerical check, passed iff deviation <= tolerance.

        Parameters
        ----------
        name: str
        deviation: float
        tolerance: float

        Returns
        -------
        bool
            passed
        """
        passed = bool(deviation <= tolerance)
        self._checks.append((name, float(deviation), float(tolerance), passed, ""))
        return passed

    def add_failure(self, name, message):
        """
        Register a structural failure (missing symbol, wrong dimension...).

        Parameters
        ----------
        name: str
        message: str
        """
        self._checks.append((name, None, None, False, message))

    def extend(self, other, prefix=""):
        """
        Add all checks of another report.

        Parameters
        ----------
        other: ValidationReport
        prefix: str
            prepended to the names of the checks of other
        """
        for name, deviation, tolerance, passed, message in other._checks:
            self._checks.append((prefix + name, deviation, tolerance, passed, message))

    @property
    def passed(self):
        """
        Check if all checks passed.

        Returns
        -------
        bool
        """
        return all(check[3] for check in self._checks)

    @property
    def max_deviation(self):
        """
        Get the max deviation of numerical checks.

        Returns
        -------
        float
            0 if no numerical check was performed
        """
        deviations = [check[1] for check in self._checks if check[1] is not None]
        return max(deviations) if len(deviations) > 0 else 0.

    def get_failures(self):
        """
        Get the names of failed checks.

        Returns
        -------
        list of str
        """
        return [check[0] for check in self._checks if not check[3]]

    def to_df(self):
        """
        Get checks as a DataFrame.

        Returns
        -------
        pandas.DataFrame
            columns: check, deviation, tolerance, passed, message
        """
        return pd.DataFrame(self._checks, columns=["check", "deviation", "tolerance", "passed", "message"])

    def to_json_data(self):
        """
        Get report as a json-serializable dict.

        Returns
        -------
        dict
        """
        return collections.OrderedDict((
            ("subject", self.subject),
            ("passed", self.passed),
            ("max_deviation", self.max_deviation),
            ("checks", [
                collections.OrderedDict((
                    ("check", name),
                    ("deviation", deviation),
                    ("tolerance", tolerance),
                    ("passed", passed),
                    ("message", message)
                )) for name, deviation, tolerance, passed, message in self._checks
            ])
        ))

    def raise_if_failed(self):
        """
        Raise if a check failed.

        Raises
        ------
        MachineValidationError
        """
        if not self.passed:
            raise MachineValidationError(str(self), report=self)

    def __repr__(self):
        """
        Repr.

        Returns
        -------
        str
        """
        return f"<ValidationReport {self.subject}: {'passed' if self.passed else 'failed'}>"

    def __str__(self):
        """
        Get a readable report, one line per check.

        Returns
        -------
        str
        """
        lines = [f"{self.subject}: {'passed' if self.passed else 'FAILED'}"]
        for name, deviation, tolerance, passed, message in self._checks:
            status = "ok" if passed else "FAILED"
            if deviation is None:
                lines.append(f"  {name}: {status} ({message})")
            else:
                lines.append(f"  {name}: {status} (deviation {deviation:.3g}, tolerance {tolerance:.3g})")
        return "\n".join(lines)
