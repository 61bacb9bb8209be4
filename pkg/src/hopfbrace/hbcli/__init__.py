"""File format, expression language and command-line front end."""
