// Reference tables; each row lists the input coordinate first.

/// Heisenberg group rows: `x, σ(x), Δ1(x), Δ2(x), Δ3(x)` with `(i,j,k)` meaning `x^i y^j z^k`.
pub const H3_ROWS: [[[u8; 3]; 5]; 27] = [
    [[0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0], [0, 0, 0]],
    [[0, 0, 1], [2, 0, 1], [2, 0, 2], [2, 0, 0], [2, 0, 1]],
    [[0, 0, 2], [1, 2, 1], [1, 2, 0], [1, 2, 2], [1, 2, 1]],
    [[0, 1, 0], [1, 2, 2], [1, 0, 0], [1, 1, 2], [1, 2, 0]],
    [[0, 1, 1], [1, 0, 1], [1, 1, 0], [1, 2, 0], [1, 0, 2]],
    [[0, 1, 2], [0, 0, 1], [0, 1, 0], [0, 2, 2], [0, 0, 1]],
    [[0, 2, 0], [0, 0, 2], [0, 2, 2], [0, 1, 2], [0, 0, 2]],
    [[0, 2, 1], [2, 0, 2], [2, 2, 1], [2, 1, 1], [2, 0, 0]],
    [[0, 2, 2], [2, 2, 1], [2, 1, 1], [2, 0, 2], [2, 2, 2]],
    [[1, 0, 0], [1, 1, 2], [2, 1, 2], [0, 1, 1], [1, 1, 1]],
    [[1, 0, 1], [1, 0, 0], [2, 0, 1], [0, 0, 2], [1, 0, 0]],
    [[1, 0, 2], [0, 1, 0], [1, 1, 2], [2, 1, 0], [0, 1, 2]],
    [[1, 1, 0], [0, 1, 1], [1, 2, 1], [2, 0, 1], [0, 1, 0]],
    [[1, 1, 1], [2, 1, 0], [0, 2, 0], [1, 0, 2], [2, 1, 1]],
    [[1, 1, 2], [2, 2, 0], [0, 0, 1], [1, 1, 0], [2, 2, 0]],
    [[1, 2, 0], [0, 1, 2], [1, 0, 2], [2, 2, 0], [0, 1, 1]],
    [[1, 2, 1], [1, 0, 2], [2, 2, 2], [0, 1, 0], [1, 0, 1]],
    [[1, 2, 2], [2, 2, 2], [0, 1, 2], [1, 0, 0], [2, 2, 1]],
    [[2, 0, 0], [1, 1, 1], [0, 1, 1], [2, 1, 2], [1, 1, 2]],
    [[2, 0, 1], [1, 2, 0], [0, 2, 1], [2, 2, 1], [1, 2, 2]],
    [[2, 0, 2], [0, 2, 1], [2, 2, 0], [1, 2, 1], [0, 2, 0]],
    [[2, 1, 0], [0, 2, 0], [2, 0, 0], [1, 1, 1], [0, 2, 2]],
    [[2, 1, 1], [2, 1, 2], [1, 2, 2], [0, 0, 1], [2, 1, 2]],
    [[2, 1, 2], [2, 0, 0], [1, 1, 1], [0, 2, 0], [2, 0, 2]],
    [[2, 2, 0], [1, 1, 0], [0, 0, 2], [2, 2, 2], [1, 1, 0]],
    [[2, 2, 1], [0, 2, 2], [2, 1, 0], [1, 0, 1], [0, 2, 1]],
    [[2, 2, 2], [2, 1, 1], [1, 0, 1], [0, 2, 1], [2, 1, 0]],
];

/// `L3` rows: `x, σ(x), Δ1(x), Δ2(x), Δ3(x)` with `(i,j)` meaning `a^i b^j`.
pub const L3_ROWS: [[[u8; 2]; 5]; 27] = [
    [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 1], [2, 0], [2, 1], [5, 2], [5, 0]],
    [[0, 2], [4, 1], [4, 0], [7, 2], [7, 1]],
    [[1, 0], [3, 1], [7, 1], [2, 1], [6, 1]],
    [[1, 1], [1, 2], [8, 0], [0, 1], [4, 2]],
    [[1, 2], [7, 1], [2, 0], [6, 2], [4, 1]],
    [[2, 0], [4, 2], [0, 2], [2, 2], [7, 2]],
    [[2, 1], [6, 0], [8, 1], [1, 2], [6, 0]],
    [[2, 2], [4, 0], [6, 2], [8, 1], [7, 0]],
    [[3, 0], [1, 1], [4, 1], [7, 1], [1, 1]],
    [[3, 1], [0, 1], [3, 2], [6, 0], [0, 1]],
    [[3, 2], [7, 2], [1, 1], [7, 0], [1, 2]],
    [[4, 0], [5, 1], [3, 1], [1, 1], [8, 1]],
    [[4, 1], [2, 2], [3, 0], [4, 1], [2, 2]],
    [[4, 2], [3, 0], [7, 2], [5, 1], [3, 0]],
    [[5, 0], [1, 0], [6, 0], [5, 0], [1, 0]],
    [[5, 1], [8, 2], [7, 0], [3, 1], [5, 2]],
    [[5, 2], [8, 1], [1, 0], [3, 2], [2, 1]],
    [[6, 0], [8, 0], [5, 0], [2, 0], [8, 0]],
    [[6, 1], [2, 1], [8, 2], [8, 0], [5, 1]],
    [[6, 2], [0, 2], [6, 1], [3, 0], [0, 2]],
    [[7, 0], [6, 2], [1, 2], [8, 2], [3, 2]],
    [[7, 1], [7, 0], [5, 1], [0, 2], [4, 0]],
    [[7, 2], [5, 2], [0, 1], [1, 0], [8, 2]],
    [[8, 0], [3, 2], [5, 2], [4, 2], [6, 2]],
    [[8, 1], [6, 1], [2, 2], [4, 0], [3, 1]],
    [[8, 2], [5, 0], [4, 2], [6, 1], [2, 0]],
];

/// Rows `h, α0, Δ1α0, Δ2α0, α1, Δ2α1, α2, Δ2α2, T1, T2` over `Z9 x Z3`, `(u,j)` meaning `c^u b^j`.
pub const ALPHA_ROWS: [[[u8; 2]; 10]; 27] = [
    [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0]],
    [[1, 0], [2, 0], [3, 0], [1, 0], [2, 0], [1, 0], [2, 0], [1, 0], [3, 0], [3, 0]],
    [[2, 0], [7, 1], [0, 1], [5, 1], [7, 2], [5, 2], [2, 1], [0, 1], [0, 2], [4, 1]],
    [[3, 0], [2, 1], [5, 1], [8, 1], [2, 2], [8, 2], [0, 2], [6, 2], [5, 2], [3, 2]],
    [[4, 0], [6, 1], [1, 1], [2, 1], [3, 1], [8, 1], [8, 1], [4, 1], [7, 1], [3, 1]],
    [[5, 0], [1, 0], [6, 0], [5, 0], [1, 0], [5, 0], [1, 0], [5, 0], [6, 0], [6, 0]],
    [[6, 0], [8, 2], [5, 2], [2, 2], [4, 2], [7, 2], [8, 2], [2, 2], [1, 2], [5, 2]],
    [[7, 0], [2, 2], [0, 2], [4, 2], [1, 1], [3, 1], [3, 1], [5, 1], [8, 1], [1, 1]],
    [[8, 0], [7, 2], [6, 2], [8, 2], [4, 1], [5, 1], [7, 2], [8, 2], [3, 1], [6, 2]],
    [[0, 1], [3, 0], [3, 1], [3, 2], [3, 0], [3, 2], [3, 0], [3, 2], [6, 1], [0, 1]],
    [[1, 1], [3, 1], [4, 2], [2, 0], [1, 2], [0, 1], [8, 0], [7, 2], [5, 0], [6, 1]],
    [[2, 1], [8, 1], [1, 2], [6, 0], [8, 1], [6, 0], [1, 1], [8, 0], [4, 2], [0, 2]],
    [[3, 1], [8, 0], [2, 1], [5, 2], [7, 0], [4, 2], [2, 2], [8, 1], [4, 1], [2, 0]],
    [[4, 1], [4, 0], [8, 1], [0, 2], [4, 0], [0, 2], [4, 0], [0, 2], [2, 1], [5, 1]],
    [[5, 1], [5, 2], [1, 0], [0, 1], [0, 1], [4, 0], [0, 1], [4, 0], [8, 2], [2, 2]],
    [[6, 1], [1, 2], [7, 0], [4, 1], [8, 2], [2, 1], [4, 2], [7, 1], [8, 0], [7, 0]],
    [[7, 1], [5, 1], [3, 2], [7, 0], [5, 1], [7, 0], [4, 1], [6, 0], [6, 2], [8, 2]],
    [[8, 1], [6, 2], [5, 0], [7, 1], [0, 2], [1, 1], [5, 2], [6, 1], [2, 0], [1, 0]],
    [[0, 2], [4, 2], [4, 1], [4, 0], [3, 2], [3, 0], [5, 1], [5, 2], [0, 1], [8, 0]],
    [[1, 2], [7, 0], [8, 2], [6, 1], [5, 0], [4, 1], [3, 2], [2, 0], [3, 2], [7, 1]],
    [[2, 2], [5, 0], [7, 2], [3, 1], [8, 0], [6, 1], [5, 0], [3, 1], [7, 2], [1, 2]],
    [[3, 2], [1, 1], [4, 0], [7, 2], [5, 2], [2, 0], [7, 1], [4, 2], [5, 1], [4, 0]],
    [[4, 2], [3, 2], [7, 1], [8, 0], [6, 1], [2, 2], [6, 0], [2, 1], [7, 0], [4, 2]],
    [[5, 2], [6, 0], [2, 2], [1, 1], [2, 1], [6, 2], [6, 1], [1, 2], [4, 0], [5, 0]],
    [[6, 2], [0, 2], [6, 1], [3, 0], [7, 1], [1, 2], [7, 0], [1, 1], [1, 0], [7, 2]],
    [[7, 2], [4, 1], [2, 0], [6, 2], [6, 2], [8, 0], [1, 2], [3, 0], [1, 1], [2, 1]],
    [[8, 2], [0, 1], [8, 0], [1, 2], [6, 0], [7, 1], [6, 2], [7, 0], [2, 2], [8, 1]],
];

/// Rows `h, f(0,0), f(0,1), .., f(2,2)` over `Z9 x Z3`, `(j,m)` meaning `b^j c^m`.
pub const F_ROWS: [[[u8; 2]; 10]; 27] = [
    [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 1], [1, 0], [1, 0], [1, 2], [1, 0], [1, 1], [1, 0], [7, 2], [1, 1], [6, 2]],
    [[0, 2], [2, 0], [5, 2], [5, 0], [5, 2], [2, 0], [2, 2], [4, 0], [2, 2], [4, 0]],
    [[1, 0], [5, 2], [1, 1], [1, 1], [7, 2], [8, 1], [4, 0], [0, 1], [8, 0], [0, 1]],
    [[1, 1], [8, 0], [7, 1], [7, 1], [4, 2], [4, 0], [5, 1], [4, 2], [7, 1], [2, 1]],
    [[1, 2], [6, 0], [6, 1], [3, 0], [3, 1], [3, 2], [7, 2], [5, 2], [4, 2], [6, 0]],
    [[2, 0], [6, 1], [5, 1], [5, 1], [4, 1], [6, 1], [5, 2], [7, 0], [7, 0], [0, 2]],
    [[2, 1], [0, 2], [2, 0], [2, 0], [1, 1], [7, 2], [8, 0], [3, 2], [1, 2], [5, 0]],
    [[2, 2], [3, 2], [3, 2], [6, 0], [6, 1], [1, 0], [7, 0], [0, 2], [6, 2], [7, 1]],
    [[3, 0], [4, 1], [7, 0], [7, 2], [7, 0], [7, 0], [2, 1], [5, 1], [5, 2], [4, 1]],
    [[3, 1], [1, 1], [0, 2], [0, 2], [0, 1], [4, 2], [4, 2], [4, 1], [4, 0], [7, 0]],
    [[3, 2], [2, 1], [4, 0], [4, 2], [4, 0], [0, 1], [6, 0], [8, 0], [3, 1], [5, 1]],
    [[4, 0], [4, 2], [8, 1], [8, 0], [2, 1], [7, 1], [1, 1], [1, 1], [0, 2], [4, 2]],
    [[4, 1], [8, 1], [2, 2], [2, 1], [8, 2], [1, 2], [0, 1], [5, 0], [8, 2], [1, 0]],
    [[4, 2], [7, 2], [6, 2], [3, 2], [3, 0], [3, 1], [3, 2], [3, 1], [2, 0], [3, 2]],
    [[5, 0], [7, 0], [8, 2], [8, 2], [5, 1], [5, 2], [1, 2], [1, 2], [8, 1], [3, 0]],
    [[5, 1], [2, 2], [4, 2], [4, 0], [2, 2], [6, 0], [3, 0], [7, 1], [4, 1], [7, 2]],
    [[5, 2], [5, 0], [3, 1], [6, 1], [6, 2], [2, 2], [4, 1], [2, 2], [5, 0], [8, 2]],
    [[6, 0], [8, 2], [2, 1], [2, 2], [0, 2], [5, 0], [6, 2], [8, 2], [2, 1], [5, 2]],
    [[6, 1], [3, 1], [0, 1], [0, 1], [8, 1], [8, 0], [7, 1], [3, 0], [7, 2], [3, 1]],
    [[6, 2], [0, 1], [8, 0], [8, 1], [2, 0], [0, 2], [8, 1], [6, 0], [3, 0], [2, 2]],
    [[7, 0], [3, 0], [5, 0], [5, 2], [3, 2], [3, 0], [5, 0], [1, 0], [0, 1], [2, 0]],
    [[7, 1], [1, 2], [6, 0], [3, 1], [5, 0], [5, 1], [0, 2], [6, 1], [1, 0], [1, 2]],
    [[7, 2], [6, 2], [4, 1], [4, 1], [1, 2], [2, 1], [2, 0], [2, 1], [6, 1], [8, 1]],
    [[8, 0], [7, 1], [1, 2], [1, 0], [6, 0], [6, 2], [6, 1], [6, 2], [3, 2], [6, 1]],
    [[8, 1], [4, 0], [3, 0], [6, 2], [8, 0], [8, 2], [8, 2], [2, 0], [6, 0], [1, 1]],
    [[8, 2], [5, 1], [7, 2], [7, 0], [7, 1], [4, 1], [3, 1], [8, 1], [5, 1], [8, 0]],
];

/// Rows `h, A(0,0), A(0,1), .., A(2,2)` over `Z9 x Z3`, `(j,m)` meaning `b^j c^m`.
pub const A_ROWS: [[[u8; 2]; 10]; 27] = [
    [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 1], [1, 1], [1, 1], [1, 0], [1, 1], [1, 2], [1, 1], [7, 0], [1, 2], [6, 0]],
    [[0, 2], [2, 2], [5, 1], [5, 2], [5, 1], [2, 2], [2, 1], [4, 2], [2, 1], [4, 2]],
    [[1, 0], [6, 2], [2, 2], [2, 0], [2, 2], [3, 2], [8, 2], [7, 1], [6, 1], [7, 0]],
    [[1, 1], [0, 1], [8, 0], [8, 1], [8, 0], [8, 2], [0, 1], [2, 0], [5, 0], [0, 1]],
    [[1, 2], [7, 2], [7, 1], [4, 1], [7, 0], [7, 2], [2, 0], [3, 1], [2, 2], [4, 1]],
    [[2, 0], [8, 1], [7, 0], [7, 2], [3, 1], [5, 0], [4, 0], [3, 0], [3, 2], [5, 0]],
    [[2, 1], [2, 0], [4, 0], [4, 2], [0, 2], [6, 2], [7, 2], [8, 0], [6, 2], [1, 2]],
    [[2, 2], [5, 1], [5, 0], [8, 0], [5, 0], [0, 1], [6, 0], [5, 1], [2, 0], [3, 1]],
    [[3, 0], [7, 1], [1, 0], [1, 2], [1, 0], [1, 0], [5, 1], [8, 1], [8, 2], [7, 1]],
    [[3, 1], [4, 2], [3, 0], [3, 0], [3, 2], [7, 0], [7, 0], [7, 2], [7, 1], [1, 1]],
    [[3, 2], [5, 0], [7, 2], [7, 1], [7, 2], [3, 0], [0, 2], [2, 2], [6, 0], [8, 0]],
    [[4, 0], [8, 2], [3, 2], [3, 2], [0, 1], [5, 2], [8, 0], [2, 1], [1, 0], [5, 1]],
    [[4, 1], [3, 2], [6, 1], [6, 1], [6, 0], [8, 1], [7, 1], [6, 1], [0, 1], [2, 0]],
    [[4, 2], [2, 1], [1, 2], [7, 0], [1, 2], [1, 1], [1, 0], [4, 0], [3, 0], [4, 0]],
    [[5, 0], [3, 0], [4, 1], [4, 0], [7, 1], [7, 1], [3, 0], [0, 2], [7, 0], [2, 1]],
    [[5, 1], [7, 0], [0, 2], [0, 2], [4, 0], [8, 0], [5, 2], [6, 2], [3, 1], [6, 1]],
    [[5, 2], [1, 2], [8, 2], [2, 1], [8, 1], [4, 0], [6, 1], [1, 1], [4, 1], [7, 2]],
    [[6, 0], [5, 2], [8, 1], [8, 2], [6, 2], [2, 0], [3, 2], [5, 2], [8, 1], [2, 2]],
    [[6, 1], [0, 2], [6, 2], [6, 2], [5, 2], [5, 1], [4, 2], [0, 1], [4, 0], [0, 2]],
    [[6, 2], [6, 0], [5, 2], [5, 0], [8, 2], [6, 1], [5, 0], [3, 2], [0, 2], [8, 1]],
    [[7, 0], [1, 0], [3, 1], [3, 1], [4, 2], [4, 1], [6, 2], [5, 0], [4, 2], [6, 2]],
    [[7, 1], [8, 0], [4, 2], [1, 1], [6, 1], [6, 0], [1, 2], [1, 2], [5, 2], [5, 2]],
    [[7, 2], [4, 1], [2, 1], [2, 2], [2, 1], [3, 1], [3, 1], [6, 0], [1, 1], [3, 2]],
    [[8, 0], [6, 1], [0, 1], [0, 1], [2, 0], [2, 1], [2, 2], [8, 2], [5, 1], [8, 2]],
    [[8, 1], [3, 1], [2, 0], [5, 1], [4, 1], [4, 2], [4, 1], [4, 1], [8, 0], [3, 0]],
    [[8, 2], [4, 0], [6, 0], [6, 0], [3, 0], [0, 2], [8, 1], [1, 0], [7, 2], [1, 0]],
];

/// Rows `h, B(0,0), B(0,1), .., B(2,2)` over `Z9 x Z3`, `(j,m)` meaning `b^j c^m`.
pub const B_ROWS: [[[u8; 2]; 10]; 27] = [
    [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 1], [1, 2], [1, 2], [1, 1], [1, 2], [1, 0], [1, 2], [7, 1], [1, 0], [6, 1]],
    [[0, 2], [2, 1], [5, 0], [5, 1], [5, 0], [2, 1], [2, 0], [4, 1], [2, 0], [4, 1]],
    [[1, 0], [4, 2], [0, 1], [0, 1], [6, 2], [7, 1], [3, 0], [8, 1], [7, 0], [8, 1]],
    [[1, 1], [7, 2], [6, 0], [6, 0], [3, 1], [3, 2], [4, 0], [3, 1], [6, 0], [1, 0]],
    [[1, 2], [5, 1], [5, 2], [2, 1], [2, 2], [2, 0], [6, 0], [4, 0], [3, 0], [5, 1]],
    [[2, 0], [4, 1], [3, 1], [3, 1], [2, 1], [4, 1], [3, 2], [5, 0], [5, 0], [7, 2]],
    [[2, 1], [7, 1], [0, 2], [0, 2], [8, 0], [5, 1], [6, 2], [1, 1], [8, 1], [3, 2]],
    [[2, 2], [1, 0], [1, 0], [4, 1], [4, 2], [8, 1], [5, 1], [7, 0], [4, 0], [5, 2]],
    [[3, 0], [1, 1], [4, 0], [4, 2], [4, 0], [4, 0], [8, 1], [2, 1], [2, 2], [1, 1]],
    [[3, 1], [7, 0], [6, 1], [6, 1], [6, 0], [1, 1], [1, 1], [1, 0], [1, 2], [4, 2]],
    [[3, 2], [8, 2], [1, 1], [1, 0], [1, 1], [6, 2], [3, 1], [5, 1], [0, 2], [2, 2]],
    [[4, 0], [0, 2], [4, 1], [4, 0], [7, 1], [3, 1], [6, 1], [6, 1], [5, 2], [0, 2]],
    [[4, 1], [4, 0], [7, 1], [7, 0], [4, 1], [6, 1], [5, 0], [1, 2], [4, 1], [6, 2]],
    [[4, 2], [3, 0], [2, 0], [8, 0], [8, 1], [8, 2], [8, 0], [8, 2], [7, 1], [8, 0]],
    [[5, 0], [2, 0], [3, 2], [3, 2], [0, 1], [0, 2], [5, 2], [5, 2], [3, 1], [7, 0]],
    [[5, 1], [6, 1], [8, 1], [8, 2], [6, 1], [1, 2], [7, 2], [2, 0], [8, 0], [2, 1]],
    [[5, 2], [0, 1], [7, 2], [1, 2], [1, 0], [6, 0], [8, 2], [6, 0], [0, 1], [3, 0]],
    [[6, 0], [2, 2], [5, 1], [5, 2], [3, 2], [8, 0], [0, 2], [2, 2], [5, 1], [8, 2]],
    [[6, 1], [6, 0], [3, 0], [3, 0], [2, 0], [2, 2], [1, 0], [6, 2], [1, 1], [6, 0]],
    [[6, 2], [3, 2], [2, 1], [2, 2], [5, 1], [3, 0], [2, 2], [0, 1], [6, 1], [5, 0]],
    [[7, 0], [5, 0], [7, 0], [7, 2], [5, 2], [5, 0], [7, 0], [3, 0], [2, 1], [4, 0]],
    [[7, 1], [3, 1], [8, 2], [5, 0], [7, 2], [7, 0], [2, 1], [8, 0], [3, 2], [3, 1]],
    [[7, 2], [8, 0], [6, 2], [6, 2], [3, 0], [4, 2], [4, 1], [4, 2], [8, 2], [1, 2]],
    [[8, 0], [8, 1], [2, 2], [2, 0], [7, 0], [7, 2], [7, 1], [7, 2], [4, 2], [7, 1]],
    [[8, 1], [5, 2], [4, 2], [7, 1], [0, 2], [0, 1], [0, 1], [3, 2], [7, 2], [2, 0]],
    [[8, 2], [6, 2], [8, 0], [8, 1], [8, 2], [5, 2], [4, 2], [0, 2], [6, 2], [0, 1]],
];

/// Rows `h, C(0,0), C(0,1), .., C(2,2)` over `Z9 x Z3`, `(j,m)` meaning `b^j c^m`.
pub const C_ROWS: [[[u8; 2]; 10]; 27] = [
    [[0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 1], [1, 0], [1, 0], [1, 2], [1, 0], [1, 1], [1, 0], [7, 2], [1, 1], [6, 2]],
    [[0, 2], [2, 0], [5, 2], [5, 0], [5, 2], [2, 0], [2, 2], [4, 0], [2, 2], [4, 0]],
    [[1, 0], [5, 2], [1, 2], [1, 0], [1, 2], [2, 2], [7, 2], [6, 1], [5, 1], [6, 0]],
    [[1, 1], [8, 0], [7, 2], [7, 0], [7, 2], [7, 1], [8, 0], [1, 2], [4, 2], [8, 0]],
    [[1, 2], [6, 0], [6, 2], [3, 2], [6, 1], [6, 0], [1, 1], [2, 2], [1, 0], [3, 2]],
    [[2, 0], [6, 1], [5, 0], [5, 2], [1, 1], [3, 0], [2, 0], [1, 0], [1, 2], [3, 0]],
    [[2, 1], [0, 2], [2, 2], [2, 1], [7, 1], [4, 1], [5, 1], [6, 2], [4, 1], [8, 1]],
    [[2, 2], [3, 2], [3, 1], [6, 1], [3, 1], [7, 2], [4, 1], [3, 2], [0, 1], [1, 2]],
    [[3, 0], [4, 1], [7, 0], [7, 2], [7, 0], [7, 0], [2, 1], [5, 1], [5, 2], [4, 1]],
    [[3, 1], [1, 1], [0, 2], [0, 2], [0, 1], [4, 2], [4, 2], [4, 1], [4, 0], [7, 0]],
    [[3, 2], [2, 1], [4, 0], [4, 2], [4, 0], [0, 1], [6, 0], [8, 0], [3, 1], [5, 1]],
    [[4, 0], [4, 2], [8, 2], [8, 2], [5, 1], [1, 2], [4, 0], [7, 1], [6, 0], [1, 1]],
    [[4, 1], [8, 1], [2, 0], [2, 0], [2, 2], [4, 0], [3, 0], [2, 0], [5, 0], [7, 2]],
    [[4, 2], [7, 2], [6, 0], [3, 1], [6, 0], [6, 2], [6, 1], [0, 1], [8, 1], [0, 1]],
    [[5, 0], [7, 0], [8, 1], [8, 0], [2, 1], [2, 1], [7, 0], [4, 2], [2, 0], [6, 1]],
    [[5, 1], [2, 2], [4, 1], [4, 1], [8, 2], [3, 2], [0, 1], [1, 1], [7, 0], [1, 0]],
    [[5, 2], [5, 0], [3, 0], [6, 2], [3, 2], [8, 1], [1, 2], [5, 2], [8, 2], [2, 0]],
    [[6, 0], [8, 2], [2, 1], [2, 2], [0, 2], [5, 0], [6, 2], [8, 2], [2, 1], [5, 2]],
    [[6, 1], [3, 1], [0, 1], [0, 1], [8, 1], [8, 0], [7, 1], [3, 0], [7, 2], [3, 1]],
    [[6, 2], [0, 1], [8, 0], [8, 1], [2, 0], [0, 2], [8, 1], [6, 0], [3, 0], [2, 2]],
    [[7, 0], [3, 0], [5, 1], [5, 1], [6, 2], [6, 1], [8, 2], [7, 0], [6, 2], [8, 2]],
    [[7, 1], [1, 2], [6, 1], [3, 0], [8, 0], [8, 2], [3, 1], [3, 1], [7, 1], [7, 1]],
    [[7, 2], [6, 2], [4, 2], [4, 0], [4, 2], [5, 2], [5, 2], [8, 1], [3, 2], [5, 0]],
    [[8, 0], [7, 1], [1, 1], [1, 1], [3, 0], [3, 1], [3, 2], [0, 2], [6, 1], [0, 2]],
    [[8, 1], [4, 0], [3, 2], [6, 0], [5, 0], [5, 1], [5, 0], [5, 0], [0, 2], [4, 2]],
    [[8, 2], [5, 1], [7, 1], [7, 1], [4, 1], [1, 0], [0, 2], [2, 1], [8, 0], [2, 1]],
];

/// Rows `h, α'1(h), α'2(h)` over `Z9 x Z3`, `(u,j)` meaning `c^u b^j`.
///
/// Besides `T_λ` and `Δ2` being bijective, these also make `h ↦ z^{λj} α'_λ(h)` bijective,
/// which the `|c| = 9` lift needs for its third layer map.
pub const TWISTED_ALPHA_ROWS: [[[u8; 2]; 3]; 27] = [
    [[0, 0], [0, 0], [0, 0]],
    [[1, 0], [6, 2], [5, 2]],
    [[2, 0], [4, 1], [1, 2]],
    [[3, 0], [7, 0], [4, 0]],
    [[4, 0], [1, 2], [6, 1]],
    [[5, 0], [8, 2], [8, 0]],
    [[6, 0], [5, 0], [1, 1]],
    [[7, 0], [5, 1], [0, 2]],
    [[8, 0], [0, 1], [5, 1]],
    [[0, 1], [8, 0], [6, 0]],
    [[1, 1], [8, 1], [1, 0]],
    [[2, 1], [3, 1], [2, 2]],
    [[3, 1], [3, 0], [6, 2]],
    [[4, 1], [0, 2], [3, 1]],
    [[5, 1], [7, 1], [7, 1]],
    [[6, 1], [1, 0], [2, 1]],
    [[7, 1], [4, 2], [5, 0]],
    [[8, 1], [2, 2], [7, 2]],
    [[0, 2], [4, 0], [7, 0]],
    [[1, 2], [7, 2], [4, 1]],
    [[2, 2], [5, 2], [3, 0]],
    [[3, 2], [2, 0], [8, 1]],
    [[4, 2], [2, 1], [8, 2]],
    [[5, 2], [6, 1], [3, 2]],
    [[6, 2], [6, 0], [2, 0]],
    [[7, 2], [3, 2], [4, 2]],
    [[8, 2], [1, 1], [0, 1]],
];
