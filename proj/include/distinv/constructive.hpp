#ifndef DISTINV_CONSTRUCTIVE_HPP
#define DISTINV_CONSTRUCTIVE_HPP

#include "distinv/list_assignment.hpp"

namespace distinv {

// Least d with d(d-1)/2 >= n: labels needed so a friendship graph's pages can
// all receive distinct unordered label pairs.
int friendship_required_labels(int n);
// Least d with d*d >= n, and at least 2: the book analogue (ordered pairs,
// plus two distinct spine labels).
int book_required_labels(int n);

// Greedy page labeling for friendship(n) under the given lists: page i gets
// the lexicographically least unused 2-set realizable from its two lists, the
// center gets its least list element. The output is verified distinguishing
// before return; a verification failure is a logic error, not a result.
Labeling friendship_list_labeling(int n, const ListAssignment& lists,
                                  const AutomorphismGroup& aut);
Labeling friendship_list_labeling(int n, const ListAssignment& lists);

// Book analogue with ordered pairs per page and two distinct spine labels.
Labeling book_list_labeling(int n, const ListAssignment& lists, const AutomorphismGroup& aut);
Labeling book_list_labeling(int n, const ListAssignment& lists);

} // namespace distinv

#endif
