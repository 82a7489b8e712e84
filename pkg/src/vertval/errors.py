"""Exception and warning types shared across the package."""


class VertvalError(Exception):
    """Base class for all library errors."""


class DataFormatError(VertvalError):
    """A dataset or manifest file could not be parsed or validated."""


class ConfigError(VertvalError):
    """An experiment configuration is inconsistent or incomplete."""


class NoReachablePairs(VertvalError):
    """Average shortest path requested for a graph with no edges."""


class EmptyBase(VertvalError):
    """ECDF fit requested on an empty base dataset."""


class EmptyTest(VertvalError):
    """Projection requested for an empty test dataset."""


class EmptySplit(VertvalError):
    """At least one split label received zero samples."""


class DegenerateHeld(VertvalError):
    """Held-out values are constant, so the sigma-based bandwidth is undefined."""


class AllZeroWeights(VertvalError):
    """Effective sample size requested for an all-zero weight vector."""


class PropertyIndexMismatch(VertvalError):
    """A cell was requested with test property equal to the split property."""


class EmptySlice(VertvalError):
    """An aggregation was requested over an empty set of cells."""


class ManifestMismatch(DataFormatError):
    """Imported samples were trained on a different split than the one evaluated."""


class NonConvergenceWarning(UserWarning):
    """The weight solver hit its iteration cap; the best iterate is returned."""


class NeffStallWarning(UserWarning):
    """Generation hit the batch cap before reaching the effective-sample target."""


class ConstantPropertyWarning(UserWarning):
    """A property column is constant; its rank correlations are treated as zero."""
