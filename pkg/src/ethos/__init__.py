"""Review-mining audit toolkit: topics, ethics alignment, sentiment, reports."""

__version__ = "0.1.0"
