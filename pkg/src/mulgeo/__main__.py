from mulgeo.cli import entry

entry()
