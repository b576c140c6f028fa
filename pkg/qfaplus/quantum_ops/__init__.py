"""qfaplus quantum operations package: density operators, operator-sum operations and projective measurements."""
