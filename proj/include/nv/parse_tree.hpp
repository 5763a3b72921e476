/*!
  \file parse_tree.hpp
  \brief Parse trees of maximal joinless codes and the initial-factor DAG.

  The greedy algorithm decides maximality for n = 2, k = 2; for higher
  dimensions only the backtracking search can certify that no parse tree
  exists.
*/

#pragma once

#include "code.hpp"

#include <map>
#include <set>
#include <unordered_set>

namespace nv
{

/*! A tree witnessing that a code arises from the root by axis-aligned
    k-way splits.  Interior vertex v has exactly k children, namely v
    extended by each digit in coordinate split_axis(v). */
struct parse_tree
{
  signature sig;
  std::vector<ntuple> vertices;            // sorted
  std::map<ntuple, std::vector<ntuple>> edges;
  std::map<ntuple, int> split_axis;        // interior vertex -> axis
  code_set leaves;

  parse_tree( signature s, code_set l ) : sig( s ), leaves( std::move( l ) ) {}

  std::size_t interior_count() const { return split_axis.size(); }
};

enum class parse_mode
{
  greedy_deterministic,
  exhaustive
};

namespace detail
{

/*! Strict initial factors of the elements of P. */
inline std::vector<ntuple> strict_initial_factors( std::vector<ntuple> const& P )
{
  std::set<ntuple> out;
  for ( auto const& p : P )
  {
    for ( auto const& v : initial_factors( p ) )
    {
      if ( !( v == p ) )
        out.insert( v );
    }
  }
  return { out.begin(), out.end() };
}

inline bool children_subset( std::vector<ntuple> const& sorted, ntuple const& v, int axis, int k )
{
  for ( int a = 0; a < k; ++a )
  {
    if ( !std::binary_search( sorted.begin(), sorted.end(), v.child( axis, a ) ) )
      return false;
  }
  return true;
}

inline std::vector<ntuple> contract( std::vector<ntuple> const& sorted, ntuple const& v, int axis, int k )
{
  std::vector<ntuple> next;
  next.reserve( sorted.size() - static_cast<std::size_t>( k ) + 1 );
  for ( auto const& e : sorted )
  {
    bool is_child = false;
    for ( int a = 0; a < k && !is_child; ++a )
      is_child = ( e == v.child( axis, a ) );
    if ( !is_child )
      next.push_back( e );
  }
  next.push_back( v );
  std::sort( next.begin(), next.end() );
  return next;
}

inline std::string state_key( std::vector<ntuple> const& sorted )
{
  std::string key;
  for ( auto const& e : sorted )
  {
    key += to_string( e );
    key += ';';
  }
  return key;
}

struct tree_builder
{
  parse_tree tree;

  explicit tree_builder( code_set const& P ) : tree( P.sig(), P )
  {
    tree.vertices = P.elements();
  }

  void add_split( ntuple const& v, int axis, int k )
  {
    tree.vertices.push_back( v );
    tree.split_axis[v] = axis;
    auto& ch = tree.edges[v];
    for ( int a = 0; a < k; ++a )
      ch.push_back( v.child( axis, a ) );
  }

  parse_tree finish()
  {
    std::sort( tree.vertices.begin(), tree.vertices.end() );
    return tree;
  }
};

} // namespace detail

/*! Greedy deterministic parse-tree construction: always contract the
    first candidate (v, axis) in the fixed total order.  Returns a tree
    iff the root is reached. */
inline std::optional<parse_tree> greedy_parse_tree( code_set const& P )
{
  if ( !P.is_joinless() )
    throw error( "NotJoinless", "parse trees are only defined for joinless codes" );
  if ( P.empty() )
    throw error( "NotJoinless", "parse trees are not defined for the empty code" );

  detail::tree_builder builder( P );
  auto work = P.elements();
  int const k = P.sig().k;
  for ( ;; )
  {
    if ( work.size() == 1 && work.front().is_root() )
      return builder.finish();
    bool found = false;
    for ( auto const& v : detail::strict_initial_factors( work ) )
    {
      for ( int axis = 1; axis <= P.sig().n && !found; ++axis )
      {
        if ( detail::children_subset( work, v, axis, k ) )
        {
          builder.add_split( v, axis, k );
          work = detail::contract( work, v, axis, k );
          found = true;
        }
      }
      if ( found )
        break;
    }
    if ( !found )
      return std::nullopt;
  }
}

namespace detail
{

inline bool exhaustive_search( std::vector<ntuple> const& work, signature sig,
                               std::unordered_set<std::string>& dead,
                               std::vector<std::pair<ntuple, int>>& splits )
{
  if ( work.size() == 1 && work.front().is_root() )
    return true;
  auto key = state_key( work );
  if ( dead.count( key ) )
    return false;
  for ( auto const& v : strict_initial_factors( work ) )
  {
    for ( int axis = 1; axis <= sig.n; ++axis )
    {
      if ( children_subset( work, v, axis, sig.k ) )
      {
        splits.emplace_back( v, axis );
        if ( exhaustive_search( contract( work, v, axis, sig.k ), sig, dead, splits ) )
          return true;
        splits.pop_back();
      }
    }
  }
  dead.insert( std::move( key ) );
  return false;
}

} // namespace detail

/*! Complete backtracking search with memoized failure states; returns a
    tree iff any parse tree exists. */
inline std::optional<parse_tree> exhaustive_parse_tree( code_set const& P )
{
  if ( !P.is_joinless() )
    throw error( "NotJoinless", "parse trees are only defined for joinless codes" );
  if ( P.empty() )
    throw error( "NotJoinless", "parse trees are not defined for the empty code" );

  std::unordered_set<std::string> dead;
  std::vector<std::pair<ntuple, int>> splits;
  if ( !detail::exhaustive_search( P.elements(), P.sig(), dead, splits ) )
    return std::nullopt;
  detail::tree_builder builder( P );
  for ( auto const& [v, axis] : splits )
    builder.add_split( v, axis, P.sig().k );
  return builder.finish();
}

inline std::optional<parse_tree> make_parse_tree( code_set const& P, parse_mode mode )
{
  return mode == parse_mode::greedy_deterministic ? greedy_parse_tree( P )
                                                  : exhaustive_parse_tree( P );
}

namespace detail
{

inline void enumerate_rec( std::vector<ntuple> const& work, signature sig,
                           std::vector<std::pair<ntuple, int>>& splits,
                           std::set<std::set<std::pair<ntuple, int>>>& seen,
                           std::vector<std::vector<std::pair<ntuple, int>>>& out )
{
  if ( work.size() == 1 && work.front().is_root() )
  {
    std::set<std::pair<ntuple, int>> canon( splits.begin(), splits.end() );
    if ( seen.insert( canon ).second )
      out.push_back( splits );
    return;
  }
  for ( auto const& v : strict_initial_factors( work ) )
  {
    for ( int axis = 1; axis <= sig.n; ++axis )
    {
      if ( children_subset( work, v, axis, sig.k ) )
      {
        splits.emplace_back( v, axis );
        enumerate_rec( contract( work, v, axis, sig.k ), sig, splits, seen, out );
        splits.pop_back();
      }
    }
  }
}

} // namespace detail

/*! All distinct parse trees of P (distinct as vertex/edge sets).
    Exponential; intended for desk-scale codes. */
inline std::vector<parse_tree> enumerate_parse_trees( code_set const& P )
{
  if ( !P.is_joinless() )
    throw error( "NotJoinless", "parse trees are only defined for joinless codes" );
  std::vector<std::vector<std::pair<ntuple, int>>> split_seqs;
  std::set<std::set<std::pair<ntuple, int>>> seen;
  std::vector<std::pair<ntuple, int>> splits;
  detail::enumerate_rec( P.elements(), P.sig(), splits, seen, split_seqs );
  std::vector<parse_tree> trees;
  for ( auto const& seq : split_seqs )
  {
    detail::tree_builder builder( P );
    for ( auto const& [v, axis] : seq )
      builder.add_split( v, axis, P.sig().k );
    trees.push_back( builder.finish() );
  }
  return trees;
}

/*! Soundness check: each interior vertex splits a single axis with all k
    children present, leaves are exactly P, and replaying the interior
    vertices as restrictions from the root reproduces P. */
inline bool parse_tree_is_valid( parse_tree const& t )
{
  for ( auto const& [v, children] : t.edges )
  {
    auto it = t.split_axis.find( v );
    if ( it == t.split_axis.end() )
      return false;
    if ( static_cast<int>( children.size() ) != t.sig.k )
      return false;
    for ( int a = 0; a < t.sig.k; ++a )
    {
      if ( std::find( children.begin(), children.end(), v.child( it->second, a ) ) == children.end() )
        return false;
    }
  }
  // replay: interior vertices ordered by weight give a restriction chain
  std::vector<std::pair<ntuple, int>> splits( t.split_axis.begin(), t.split_axis.end() );
  std::sort( splits.begin(), splits.end(), []( auto const& a, auto const& b ) {
    return a.first.weight() < b.first.weight();
  } );
  code_set cur( t.sig, { ntuple::root( t.sig ) } );
  for ( auto const& [v, axis] : splits )
  {
    if ( !cur.contains( v ) )
      return false;
    cur = one_step_restriction( cur, v, axis );
  }
  return cur == t.leaves;
}

/*! The initial-factor DAG of P: vertices are all initial factors of
    elements of P, edges the one-digit extensions on root-to-P paths. */
class p_dag
{
public:
  explicit p_dag( code_set const& P ) : sig_( P.sig() ), code_( P )
  {
    std::set<ntuple> verts;
    for ( auto const& p : P )
    {
      for ( auto const& v : initial_factors( p ) )
        verts.insert( v );
    }
    vertices_.assign( verts.begin(), verts.end() );
    for ( auto const& v : vertices_ )
    {
      std::vector<ntuple> ch;
      for ( int axis = 1; axis <= sig_.n; ++axis )
      {
        for ( int a = 0; a < sig_.k; ++a )
        {
          auto c = v.child( axis, a );
          if ( verts.count( c ) )
            ch.push_back( c );
        }
      }
      if ( !ch.empty() )
        edges_[v] = std::move( ch );
    }
  }

  signature const& sig() const { return sig_; }
  std::vector<ntuple> const& vertices() const { return vertices_; }
  std::map<ntuple, std::vector<ntuple>> const& edges() const { return edges_; }

  bool is_leaf( ntuple const& v ) const { return edges_.find( v ) == edges_.end(); }

  std::vector<ntuple> leaves() const
  {
    std::vector<ntuple> out;
    for ( auto const& v : vertices_ )
      if ( is_leaf( v ) )
        out.push_back( v );
    return out;
  }

  //! depth of a vertex: total coordinate length
  static std::uint64_t depth( ntuple const& v ) { return v.weight(); }

  /*! Leaves of the interior DAG: interior vertices all of whose children
      are leaves of the P-DAG. */
  std::vector<ntuple> interior_leaves() const
  {
    std::vector<ntuple> out;
    for ( auto const& [v, ch] : edges_ )
    {
      bool all_leaf = true;
      for ( auto const& c : ch )
        all_leaf = all_leaf && is_leaf( c );
      if ( all_leaf )
        out.push_back( v );
    }
    return out;
  }

  /*! Children of v that belong to P itself. */
  std::vector<ntuple> children_in_code( ntuple const& v ) const
  {
    std::vector<ntuple> out;
    auto it = edges_.find( v );
    if ( it == edges_.end() )
      return out;
    for ( auto const& c : it->second )
      if ( code_.contains( c ) )
        out.push_back( c );
    return out;
  }

private:
  signature sig_;
  code_set code_;
  std::vector<ntuple> vertices_;
  std::map<ntuple, std::vector<ntuple>> edges_;
};

} // namespace nv
