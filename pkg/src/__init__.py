# gue-expand: 1/n^2 expansions of GUE linear eigenvalue statistics
