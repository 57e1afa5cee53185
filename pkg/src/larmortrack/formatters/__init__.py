from larmortrack.formatters.base import FormatterConfig, ReportFormatter
from larmortrack.formatters.human_formatter import HumanFormatter
from larmortrack.formatters.json_formatter import JsonFormatter
from larmortrack.formatters.markdown_formatter import MarkdownFormatter

__all__ = ["FormatterConfig", "HumanFormatter", "JsonFormatter", "MarkdownFormatter", "ReportFormatter"]
