"""Report schemas and renderers for clawfree.

Import `clawfree.reporting.schemas` or `clawfree.reporting.render` directly;
the matroid and analysis modules depend on the schemas, and the renderers
depend on the constructions.
"""
