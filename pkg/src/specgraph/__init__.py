"""specgraph: algebraically-defined graph families, finite-field character
sums, closed-form spectra with a numeric cross-check, and slack-annotated
audits of the classical spectral bounds."""

__version__ = "0.1.0"
