"""Rich console theme for CLI reports."""

from rich.theme import Theme

CONSOLE_THEME = Theme(
    {
        "key": "bold #004578",
        "pass": "bold #4EBF71",
        "fail": "bold #ba3c5b",
        "warn": "#ffa62b",
        "muted": "#666666",
        "strut": "#c0392b",
        "cable": "#1f5fbf",
    }
)
