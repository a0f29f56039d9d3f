#include "core/pathlist.hpp"

#include <cassert>
#include <stdexcept>

namespace copath {

void SlotList::push(PairSlot* s) {
    s->link = nullptr;
    if (tail)
        tail->link = s;
    else
        head = s;
    tail = s;
}

PairSlot* SlotList::pop() {
    PairSlot* s = head;
    if (s) {
        head = s->link;
        if (!head)
            tail = nullptr;
        s->link = nullptr;
    }
    return s;
}

void SlotList::splice(SlotList& other) {
    if (!other.head)
        return;
    if (tail)
        tail->link = other.head;
    else
        head = other.head;
    tail = other.tail;
    other.head = other.tail = nullptr;
}

void CoverSet::push(PathList* p) {
    bool ws = p->first_st != nullptr;
    PathList*& h = ws ? ws_head : wo_head;
    PathList*& t = ws ? ws_tail : wo_tail;
    p->cprev = t;
    p->cnext = nullptr;
    if (t)
        t->cnext = p;
    else
        h = p;
    t = p;
    ++path_count;
    steiner_total += p->steiner;
    terminal_total += p->terminals;
}

static PathList* pop_head(PathList*& h, PathList*& t) {
    PathList* p = h;
    h = p->cnext;
    if (h)
        h->cprev = nullptr;
    else
        t = nullptr;
    p->cprev = p->cnext = nullptr;
    return p;
}

PathList* CoverSet::pop_any() {
    assert(path_count > 0);
    PathList* p = wo_head ? pop_head(wo_head, wo_tail) : pop_head(ws_head, ws_tail);
    --path_count;
    steiner_total -= p->steiner;
    terminal_total -= p->terminals;
    return p;
}

PathList* CoverSet::pop_with_steiner() {
    assert(ws_head != nullptr);
    PathList* p = pop_head(ws_head, ws_tail);
    --path_count;
    steiner_total -= p->steiner;
    terminal_total -= p->terminals;
    return p;
}

static void splice_list(PathList*& h, PathList*& t, PathList* oh, PathList* ot) {
    if (!oh)
        return;
    oh->cprev = t;
    if (t)
        t->cnext = oh;
    else
        h = oh;
    t = ot;
}

void CoverSet::merge(CoverSet& other) {
    splice_list(wo_head, wo_tail, other.wo_head, other.wo_tail);
    splice_list(ws_head, ws_tail, other.ws_head, other.ws_tail);
    path_count += other.path_count;
    steiner_total += other.steiner_total;
    terminal_total += other.terminal_total;
    other = CoverSet{};
}

PathCell* PathArena::cell_for(int leaf, bool terminal) {
    PathCell*& c = cell_of_.at(leaf);
    if (!c) {
        cells_.emplace_back();
        c = &cells_.back();
    }
    *c = PathCell{};
    c->leaf = leaf;
    c->terminal = terminal;
    return c;
}

PathList* PathArena::new_path() {
    PathList* p = free_paths_;
    if (p)
        free_paths_ = p->cnext;
    else {
        paths_.emplace_back();
        p = &paths_.back();
    }
    *p = PathList{};
    return p;
}

void PathArena::free_path(PathList* p) {
    p->cnext = free_paths_;
    free_paths_ = p;
}

void PathArena::free_slot(PairSlot* s) {
    s->link = free_slots_;
    free_slots_ = s;
}

void PathArena::note_adjacency(PathList* p, PathCell* u, PathCell* v) {
    if (!u->terminal || !v->terminal)
        return;
    PairSlot* s = free_slots_;
    if (s)
        free_slots_ = s->link;
    else {
        slots_.emplace_back();
        s = &slots_.back();
    }
    s->u = u;
    s->v = v;
    s->link = nullptr;
    (defer_mode ? deferred_ : p->slots).push(s);
}

void PathArena::splice_deferred(PathList* p) {
    p->slots.splice(deferred_);
}

void PathArena::recycle_cover(CoverSet& c) {
    for (PathList* h : {c.wo_head, c.ws_head}) {
        for (PathList* p = h; p;) {
            while (PairSlot* s = p->slots.pop())
                free_slot(s);
            PathList* nx = p->cnext;
            free_path(p);
            p = nx;
        }
    }
    c = CoverSet{};
}

void append_vertex(PathArena& a, PathList* p, int leaf, bool terminal) {
    PathCell* c = a.cell_for(leaf, terminal);
    if (!p->head) {
        p->head = p->tail = c;
    } else {
        PathCell* t = p->tail;
        t->next = c;
        c->prev = t;
        p->tail = c;
        a.note_adjacency(p, t, c);
    }
    if (terminal) {
        ++p->terminals;
    } else {
        ++p->steiner;
        c->sprev = p->last_st;
        if (p->last_st)
            p->last_st->snext = c;
        else
            p->first_st = c;
        p->last_st = c;
    }
}

void combine(PathArena& a, PathList* p, int leaf, bool terminal, PathList* q) {
    assert(p->tail && q->head);
    PathCell* c = a.cell_for(leaf, terminal);
    PathCell* pt = p->tail;
    PathCell* qh = q->head;
    pt->next = c;
    c->prev = pt;
    c->next = qh;
    qh->prev = c;
    p->tail = q->tail;
    if (terminal) {
        a.note_adjacency(p, pt, c);
        a.note_adjacency(p, c, qh);
        if (p->last_st)
            p->last_st->snext = q->first_st;
        if (q->first_st)
            q->first_st->sprev = p->last_st;
        if (!p->first_st)
            p->first_st = q->first_st;
        if (q->last_st)
            p->last_st = q->last_st;
    } else {
        c->sprev = p->last_st;
        if (p->last_st)
            p->last_st->snext = c;
        else
            p->first_st = c;
        c->snext = q->first_st;
        if (q->first_st)
            q->first_st->sprev = c;
        p->last_st = q->last_st ? q->last_st : c;
    }
    p->terminals += q->terminals + (terminal ? 1 : 0);
    p->steiner += q->steiner + (terminal ? 0 : 1);
    p->slots.splice(q->slots);
    a.free_path(q);
}

void concat(PathArena& a, PathList* p, PathList* q) {
    assert(p->tail && q->head);
    PathCell* pt = p->tail;
    PathCell* qh = q->head;
    pt->next = qh;
    qh->prev = pt;
    p->tail = q->tail;
    a.note_adjacency(p, pt, qh);
    if (p->last_st)
        p->last_st->snext = q->first_st;
    if (q->first_st)
        q->first_st->sprev = p->last_st;
    if (!p->first_st)
        p->first_st = q->first_st;
    if (q->last_st)
        p->last_st = q->last_st;
    p->terminals += q->terminals;
    p->steiner += q->steiner;
    p->slots.splice(q->slots);
    a.free_path(q);
}

void replace_first_steiner(PathArena& a, PathList* p, int leaf) {
    PathCell* x = p->first_st;
    assert(x && x->prev && x->next);  // path ends are terminal cells
    p->first_st = x->snext;
    if (x->snext)
        x->snext->sprev = nullptr;
    else
        p->last_st = nullptr;
    x->snext = nullptr;
    x->leaf = leaf;
    x->terminal = true;
    --p->steiner;
    ++p->terminals;
    a.note_adjacency(p, x->prev, x);
    a.note_adjacency(p, x, x->next);
}

void insert_terminal(PathArena& a, PathList* p, int leaf) {
    while (PairSlot* s = p->slots.pop()) {
        PathCell* u = s->u;
        PathCell* v = s->v;
        a.free_slot(s);
        if (u->next != v)
            continue;  // adjacency broken since recorded; never valid again
        assert(u->terminal && v->terminal);
        PathCell* c = a.cell_for(leaf, true);
        u->next = c;
        c->prev = u;
        c->next = v;
        v->prev = c;
        ++p->terminals;
        a.note_adjacency(p, u, c);
        a.note_adjacency(p, c, v);
        return;
    }
    throw std::logic_error("insert_terminal: no valid slot left");
}

std::pair<PathList*, PathList*> split_first_steiner(PathArena& a, PathList* p) {
    PathCell* x = p->first_st;
    assert(x && x->prev && x->next);
    // count terminals on the shorter side; the left part precedes the first
    // non-terminal, so it is all-terminal
    long long lterm = 0, rterm = 0;
    {
        PathCell* f = p->head;
        long long cf = 0;
        PathCell* b = p->tail;
        long long cb = 0;
        for (;;) {
            if (f == x) {
                lterm = cf;
                rterm = p->terminals - cf;
                break;
            }
            if (b == x) {
                rterm = cb - (p->steiner - 1);
                lterm = p->terminals - rterm;
                break;
            }
            ++cf;
            f = f->next;
            ++cb;
            b = b->prev;
        }
    }
    PathCell* u = x->prev;
    PathCell* v = x->next;
    u->next = nullptr;
    v->prev = nullptr;
    PathList* l = a.new_path();
    l->head = p->head;
    l->tail = u;
    l->terminals = lterm;
    PathList* r = a.new_path();
    r->head = v;
    r->tail = p->tail;
    r->first_st = x->snext;
    if (x->snext)
        x->snext->sprev = nullptr;
    r->last_st = p->last_st == x ? nullptr : p->last_st;
    r->terminals = rterm;
    r->steiner = p->steiner - 1;
    r->slots = p->slots;
    x->prev = x->next = x->snext = x->sprev = nullptr;
    p->slots = SlotList{};
    a.free_path(p);
    return {l, r};
}

PathSnapshot snapshot_path(const PathList* p) {
    PathSnapshot s;
    for (const PathCell* c = p->head; c; c = c->next) {
        s.verts.push_back(c->leaf);
        s.term.push_back(c->terminal ? 1 : 0);
    }
    return s;
}

std::vector<PathSnapshot> snapshot_cover(const CoverSet& c) {
    std::vector<PathSnapshot> out;
    for (const PathList* p = c.wo_head; p; p = p->cnext)
        out.push_back(snapshot_path(p));
    for (const PathList* p = c.ws_head; p; p = p->cnext)
        out.push_back(snapshot_path(p));
    return out;
}

} // namespace copath
