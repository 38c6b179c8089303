/// `(p, λ, dim D^λ)` for every nonempty p-regular `λ ⊢ r ≤ 7`, produced by the
/// tabloid oracle and frozen.
pub const IRREDUCIBLE_DIMS: &[(u32, &str, usize)] = &[
    (2, "1", 1),
    (2, "2", 1),
    (2, "3", 1),
    (2, "2,1", 2),
    (2, "4", 1),
    (2, "3,1", 2),
    (2, "5", 1),
    (2, "4,1", 4),
    (2, "3,2", 4),
    (2, "6", 1),
    (2, "5,1", 4),
    (2, "4,2", 4),
    (2, "3,2,1", 16),
    (2, "7", 1),
    (2, "6,1", 6),
    (2, "5,2", 14),
    (2, "4,3", 8),
    (2, "4,2,1", 20),
    (3, "1", 1),
    (3, "2", 1),
    (3, "1,1", 1),
    (3, "3", 1),
    (3, "2,1", 1),
    (3, "4", 1),
    (3, "3,1", 3),
    (3, "2,2", 1),
    (3, "2,1,1", 3),
    (3, "5", 1),
    (3, "4,1", 4),
    (3, "3,2", 1),
    (3, "3,1,1", 6),
    (3, "2,2,1", 4),
    (3, "6", 1),
    (3, "5,1", 4),
    (3, "4,2", 9),
    (3, "4,1,1", 6),
    (3, "3,3", 1),
    (3, "3,2,1", 4),
    (3, "2,2,1,1", 9),
    (3, "7", 1),
    (3, "6,1", 6),
    (3, "5,2", 13),
    (3, "5,1,1", 15),
    (3, "4,3", 1),
    (3, "4,2,1", 20),
    (3, "3,3,1", 6),
    (3, "3,2,2", 15),
    (3, "3,2,1,1", 13),
    (5, "1", 1),
    (5, "2", 1),
    (5, "1,1", 1),
    (5, "3", 1),
    (5, "2,1", 2),
    (5, "1,1,1", 1),
    (5, "4", 1),
    (5, "3,1", 3),
    (5, "2,2", 2),
    (5, "2,1,1", 3),
    (5, "1,1,1,1", 1),
    (5, "5", 1),
    (5, "4,1", 3),
    (5, "3,2", 5),
    (5, "3,1,1", 3),
    (5, "2,2,1", 5),
    (5, "2,1,1,1", 1),
    (5, "6", 1),
    (5, "5,1", 5),
    (5, "4,2", 8),
    (5, "4,1,1", 10),
    (5, "3,3", 5),
    (5, "3,2,1", 8),
    (5, "3,1,1,1", 10),
    (5, "2,2,2", 5),
    (5, "2,2,1,1", 1),
    (5, "2,1,1,1,1", 5),
    (5, "7", 1),
    (5, "6,1", 6),
    (5, "5,2", 8),
    (5, "5,1,1", 15),
    (5, "4,3", 13),
    (5, "4,2,1", 35),
    (5, "4,1,1,1", 20),
    (5, "3,3,1", 8),
    (5, "3,2,2", 13),
    (5, "3,2,1,1", 35),
    (5, "3,1,1,1,1", 15),
    (5, "2,2,2,1", 1),
    (5, "2,2,1,1,1", 6),
    (7, "1", 1),
    (7, "2", 1),
    (7, "1,1", 1),
    (7, "3", 1),
    (7, "2,1", 2),
    (7, "1,1,1", 1),
    (7, "4", 1),
    (7, "3,1", 3),
    (7, "2,2", 2),
    (7, "2,1,1", 3),
    (7, "1,1,1,1", 1),
    (7, "5", 1),
    (7, "4,1", 4),
    (7, "3,2", 5),
    (7, "3,1,1", 6),
    (7, "2,2,1", 5),
    (7, "2,1,1,1", 4),
    (7, "1,1,1,1,1", 1),
    (7, "6", 1),
    (7, "5,1", 5),
    (7, "4,2", 9),
    (7, "4,1,1", 10),
    (7, "3,3", 5),
    (7, "3,2,1", 16),
    (7, "3,1,1,1", 10),
    (7, "2,2,2", 5),
    (7, "2,2,1,1", 9),
    (7, "2,1,1,1,1", 5),
    (7, "1,1,1,1,1,1", 1),
    (7, "7", 1),
    (7, "6,1", 5),
    (7, "5,2", 14),
    (7, "5,1,1", 10),
    (7, "4,3", 14),
    (7, "4,2,1", 35),
    (7, "4,1,1,1", 10),
    (7, "3,3,1", 21),
    (7, "3,2,2", 21),
    (7, "3,2,1,1", 35),
    (7, "3,1,1,1,1", 5),
    (7, "2,2,2,1", 14),
    (7, "2,2,1,1,1", 14),
    (7, "2,1,1,1,1,1", 1),
];
