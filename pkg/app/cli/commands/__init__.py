"""
Subcommand modules. Each exposes register(subparsers, common) and sets a
handler via set_defaults(handler=...); handlers return a pydantic payload,
a list of payloads or a list of strings.
"""
