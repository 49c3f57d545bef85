"""langcat: a catalogue of language data sources.

Core pieces: the entry schema with per-resource-type conditional sections,
BCP-47 language tag handling, a gazetteer-backed location model, an
append-only versioned entry store with a second-reviewer validation
workflow, and aggregation analytics. The HTTP service and the CLI are thin
wrappers over these modules.
"""

__version__ = "0.1.0"
