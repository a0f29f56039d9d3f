#ifndef COPATH_PATHLIST_HPP
#define COPATH_PATHLIST_HPP

#include <deque>
#include <utility>
#include <vector>

namespace copath {

// Mutable path/cover machinery used by the cover construction.  Paths are
// doubly-linked lists of cells with a second thread through the non-terminal
// cells, so locating, replacing and splitting at a non-terminal is O(1).
// Each vertex owns at most one cell ever: a vertex re-materializes only after
// the cover containing its previous cell was abandoned, so the cell object is
// simply reset and relinked.

struct PathCell {
    int leaf = -1;
    bool terminal = false;
    PathCell* prev = nullptr;
    PathCell* next = nullptr;
    PathCell* sprev = nullptr;  // non-terminal thread
    PathCell* snext = nullptr;
};

// Remembered terminal-terminal adjacency, used as a candidate insertion spot.
// Valid iff the two cells are still adjacent (a single pointer compare);
// adjacencies between terminals never re-form once broken, so an invalid slot
// can be discarded for good.
struct PairSlot {
    PathCell* u = nullptr;
    PathCell* v = nullptr;
    PairSlot* link = nullptr;
};

struct SlotList {
    PairSlot* head = nullptr;
    PairSlot* tail = nullptr;

    bool empty() const { return head == nullptr; }
    void push(PairSlot* s);
    PairSlot* pop();
    void splice(SlotList& other);  // append `other`, emptying it
};

struct PathList {
    PathCell* head = nullptr;
    PathCell* tail = nullptr;
    PathCell* first_st = nullptr;  // ends of the non-terminal thread
    PathCell* last_st = nullptr;
    long long terminals = 0;
    long long steiner = 0;
    SlotList slots;
    PathList* cprev = nullptr;     // cover membership
    PathList* cnext = nullptr;
};

// Cover under construction: two intrusive FIFO lists of paths (without /
// with non-terminal vertices) plus aggregate counters.
struct CoverSet {
    PathList* wo_head = nullptr;
    PathList* wo_tail = nullptr;
    PathList* ws_head = nullptr;
    PathList* ws_tail = nullptr;
    long long path_count = 0;
    long long steiner_total = 0;
    long long terminal_total = 0;

    bool empty() const { return path_count == 0; }
    void push(PathList* p);
    PathList* pop_any();          // steiner-free paths first, then the rest
    PathList* pop_with_steiner();
    void merge(CoverSet& other);  // O(1); empties `other`
};

// Owns every cell, path and slot object; recycles paths and slots through
// free lists so a full cover construction allocates O(vertices) memory.
class PathArena {
public:
    explicit PathArena(int leaf_count) : cell_of_(leaf_count, nullptr) {}

    PathCell* cell_for(int leaf, bool terminal);
    PathList* new_path();
    void free_path(PathList* p);
    void free_slot(PairSlot* s);

    // records a fresh terminal-terminal adjacency of `p` (no-op otherwise);
    // while defer_mode is on the slot is parked and only attached by
    // splice_deferred, so it cannot be consumed by the step that created it
    void note_adjacency(PathList* p, PathCell* u, PathCell* v);
    void splice_deferred(PathList* p);

    // returns every path object and slot of an abandoned cover to the free
    // lists; the cells stay owned by their vertices for later reuse
    void recycle_cover(CoverSet& c);

    bool defer_mode = false;

private:
    std::deque<PathCell> cells_;
    std::deque<PathList> paths_;
    std::deque<PairSlot> slots_;
    std::vector<PathCell*> cell_of_;
    PathList* free_paths_ = nullptr;
    PairSlot* free_slots_ = nullptr;
    SlotList deferred_;
};

// path surgery; all O(1)
void append_vertex(PathArena& a, PathList* p, int leaf, bool terminal);
void combine(PathArena& a, PathList* p, int leaf, bool terminal, PathList* q);
void concat(PathArena& a, PathList* p, PathList* q);
void replace_first_steiner(PathArena& a, PathList* p, int leaf);
void insert_terminal(PathArena& a, PathList* p, int leaf);

// splits off the first non-terminal cell; the left part is steiner-free.
// O(min(|left|, |right|)) for the terminal counters; the slot list stays with
// the right part (safe: see the cover-construction notes)
std::pair<PathList*, PathList*> split_first_steiner(PathArena& a, PathList* p);

// test support: materialized view of paths and covers
struct PathSnapshot {
    std::vector<int> verts;
    std::vector<char> term;
};
PathSnapshot snapshot_path(const PathList* p);
std::vector<PathSnapshot> snapshot_cover(const CoverSet& c);

} // namespace copath

#endif
