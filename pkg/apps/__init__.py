"""Domain apps package."""
