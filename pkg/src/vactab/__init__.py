"""Growth diagrams and bijections for vacillating tableaux identities."""
