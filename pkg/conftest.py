# examples/ is a reference corpus of third-party sources, not test input.
collect_ignore = ["examples"]
