"""Exception types. Each carries a stable short ``code`` string."""


class BoxseqError(ValueError):
    code = "error"


class KnotAmbiguousError(BoxseqError):
    code = "knot-ambiguous"


class UnboundedSupportError(BoxseqError):
    code = "unbounded-support"


class NTooSmallError(BoxseqError):
    code = "n-too-small"


class EmptyRangeError(BoxseqError):
    code = "empty-range"
