/*!
  \file table.hpp
  \brief Group elements of nG_{k,1} as tables: bijections between finite
  maximal joinless codes, with application, inversion, composition,
  restriction, end-equivalence and maximal-extension search.

  Tables are kept in as-computed form; equality of group elements is
  always end_equivalent, never pair-set equality.  Pairs are listed
  sorted by domain tuple, which is a serialization order only.
*/

#pragma once

#include "code.hpp"

#include <map>
#include <unordered_set>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace nv
{

class table
{
public:
  using pair_list = std::vector<std::pair<ntuple, ntuple>>;

  table( signature sig, pair_list pairs ) : sig_( sig ), pairs_( std::move( pairs ) )
  {
    check_signature( sig );
    for ( auto const& [d, i] : pairs_ )
    {
      if ( !( d.sig() == sig_ ) || !( i.sig() == sig_ ) )
        throw error( "SignatureMismatch", "table pair does not match signature" );
    }
    std::sort( pairs_.begin(), pairs_.end(),
               []( auto const& a, auto const& b ) { return a.first < b.first; } );
  }

  static table identity_on( code_set const& P )
  {
    pair_list ps;
    ps.reserve( P.size() );
    for ( auto const& p : P )
      ps.emplace_back( p, p );
    return table( P.sig(), std::move( ps ) );
  }

  signature const& sig() const { return sig_; }
  pair_list const& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  code_set domain_code() const
  {
    std::vector<ntuple> d;
    d.reserve( pairs_.size() );
    for ( auto const& [dom, img] : pairs_ )
      d.push_back( dom );
    return code_set( sig_, std::move( d ) );
  }

  code_set image_code() const
  {
    std::vector<ntuple> v;
    v.reserve( pairs_.size() );
    for ( auto const& [dom, img] : pairs_ )
      v.push_back( img );
    return code_set( sig_, std::move( v ) );
  }

  bool operator==( table const& o ) const { return sig_ == o.sig_ && pairs_ == o.pairs_; }

  struct diagnosis
  {
    bool ok;
    std::string first_violation; // empty when ok
  };

  /*! Checks the table invariants; names the first violated clause. */
  diagnosis validate() const
  {
    if ( pairs_.empty() )
      return { false, "table has no pairs" };
    auto dom = domain_code();
    if ( dom.size() != pairs_.size() )
      return { false, "domain tuples are not distinct" };
    auto img = image_code();
    if ( img.size() != pairs_.size() )
      return { false, "image tuples are not distinct (not a bijection)" };
    if ( !dom.is_joinless() )
      return { false, "domain code is not joinless" };
    if ( !dom.is_maximal_joinless() )
      return { false, "domain code is not maximal" };
    if ( !img.is_joinless() )
      return { false, "image code is not joinless" };
    if ( !img.is_maximal_joinless() )
      return { false, "image code is not maximal" };
    return { true, {} };
  }

  /*! f(p v) = F(p) v for the unique p in domC below x; nullopt when x is
      too shallow to have an initial factor in domC. */
  std::optional<ntuple> apply( ntuple const& x ) const
  {
    if ( !( x.sig() == sig_ ) )
      throw error( "SignatureMismatch", "argument does not match table signature" );
    auto it = find_pair( x );
    if ( it == pairs_.end() )
      return std::nullopt;
    auto rest = left_quotient( it->first, x );
    return concat( it->second, *rest );
  }

  bool is_identity() const
  {
    for ( auto const& [d, i] : pairs_ )
      if ( !( d == i ) )
        return false;
    return true;
  }

private:
  pair_list::const_iterator find_pair( ntuple const& x ) const
  {
    if ( sig_.n == 1 )
    {
      auto it = std::upper_bound( pairs_.begin(), pairs_.end(), x,
                                  []( ntuple const& v, auto const& pr ) { return v < pr.first; } );
      if ( it == pairs_.begin() )
        return pairs_.end();
      --it;
      if ( is_prefix( it->first.coord( 0 ), x.coord( 0 ) ) )
        return it;
      return pairs_.end();
    }
    for ( auto it = pairs_.begin(); it != pairs_.end(); ++it )
    {
      if ( leq_init( it->first, x ) )
        return it;
    }
    return pairs_.end();
  }

  signature sig_;
  pair_list pairs_;
};

inline table inverse( table const& t )
{
  table::pair_list ps;
  ps.reserve( t.size() );
  for ( auto const& [d, i] : t.pairs() )
    ps.emplace_back( i, d );
  return table( t.sig(), std::move( ps ) );
}

/*! ell(f) = max ell over domain and image codes. */
inline int ell( table const& t )
{
  int m = 0;
  for ( auto const& [d, i] : t.pairs() )
    m = std::max( { m, ell( d ), ell( i ) } );
  return m;
}

namespace detail
{

/*! String-level composition for n = 1: the join of two prefix codes is
    their common refinement, computed with prefix-hash walks, and both
    table applications are prefix replacements. */
inline table compose_v( table const& f2, table const& f1 )
{
  signature const sig = f2.sig();
  std::vector<std::pair<std::string, std::string>> f1_by_img; // (img, dom)
  f1_by_img.reserve( f1.size() );
  for ( auto const& [d, i] : f1.pairs() )
    f1_by_img.emplace_back( i.coord( 0 ), d.coord( 0 ) );
  std::sort( f1_by_img.begin(), f1_by_img.end() );

  std::unordered_set<std::string> img1set, dom2set;
  for ( auto const& [i, d] : f1_by_img )
    img1set.insert( i );
  for ( auto const& [d, i] : f2.pairs() )
    dom2set.insert( d.coord( 0 ) );
  auto has_prefix_in = []( std::unordered_set<std::string> const& s, std::string const& x ) {
    std::string pre;
    pre.reserve( x.size() );
    if ( s.count( pre ) )
      return true;
    for ( char c : x )
    {
      pre.push_back( c );
      if ( s.count( pre ) )
        return true;
    }
    return false;
  };

  std::vector<std::string> joint;
  for ( auto const& [i, d] : f1_by_img )
    if ( has_prefix_in( dom2set, i ) )
      joint.push_back( i );
  for ( auto const& [d, i] : f2.pairs() )
    if ( !img1set.count( d.coord( 0 ) ) && has_prefix_in( img1set, d.coord( 0 ) ) )
      joint.push_back( d.coord( 0 ) );

  // lexicographic-predecessor prefix lookup in a sorted prefix code
  auto img1_entry = [&]( std::string const& x ) -> std::pair<std::string, std::string> const& {
    auto it = std::upper_bound( f1_by_img.begin(), f1_by_img.end(), x,
                                []( std::string const& v, auto const& pr ) { return v < pr.first; } );
    if ( it == f1_by_img.begin() )
      throw error( "BadTable", "image code does not cover its ideal" );
    return *--it;
  };

  table::pair_list ps;
  ps.reserve( joint.size() );
  for ( auto const& j : joint )
  {
    auto const& [img1, dom1] = img1_entry( j );
    auto const y = f2.apply( ntuple::trusted( sig, { j } ) );
    ps.emplace_back( ntuple::trusted( sig, { dom1 + j.substr( img1.size() ) } ), std::move( *y ) );
  }
  return table( sig, std::move( ps ) );
}

} // namespace detail

/*! Table of f2 o f1 with domain code f1^{-1}(P2 v Q1) and image code
    f2(P2 v Q1). */
inline table compose( table const& f2, table const& f1 )
{
  if ( !( f2.sig() == f1.sig() ) )
    throw error( "SignatureMismatch", "cannot compose tables over different monoids" );
  if ( f2.sig().n == 1 )
    return detail::compose_v( f2, f1 );
  auto mid = elementwise_join( f2.domain_code().with_flags( tristate::yes, tristate::yes ),
                               f1.image_code().with_flags( tristate::yes, tristate::yes ) );
  table f1inv = inverse( f1 );
  table::pair_list ps;
  ps.reserve( mid.size() );
  for ( auto const& j : mid )
    ps.emplace_back( *f1inv.apply( j ), *f2.apply( j ) );
  return table( f2.sig(), std::move( ps ) );
}

/*! Restriction of t to the right ideal of P'; end-equivalent to t. */
inline table restrict_table( table const& t, code_set const& Pprime )
{
  if ( !( t.sig() == Pprime.sig() ) )
    throw error( "SignatureMismatch", "restriction code over a different monoid" );
  if ( !Pprime.is_joinless() || !Pprime.is_maximal_joinless() )
    throw error( "NotMaximal", "restriction requires a finite maximal joinless code" );
  table::pair_list ps;
  ps.reserve( Pprime.size() );
  for ( auto const& p : Pprime )
  {
    auto img = t.apply( p );
    if ( !img )
      throw error( "NotBelowDomain", to_string( p ) + " has no initial factor in the domain code" );
    ps.emplace_back( p, *img );
  }
  return table( t.sig(), std::move( ps ) );
}

/*! f1 == f2 as group elements: restrict both to domC(f1) v domC(f2) and
    compare the pair sets. */
inline bool end_equivalent( table const& f1, table const& f2 )
{
  if ( !( f1.sig() == f2.sig() ) )
    throw error( "SignatureMismatch", "tables over different monoids" );
  auto joint = elementwise_join( f1.domain_code().with_flags( tristate::yes, tristate::yes ),
                                 f2.domain_code().with_flags( tristate::yes, tristate::yes ) );
  for ( auto const& j : joint )
  {
    if ( !( *f1.apply( j ) == *f2.apply( j ) ) )
      return false;
  }
  return true;
}

namespace detail
{

/*! One-step table extension at (parent, axis): the k axis-children of
    parent are domain elements whose images are the matching axis-children
    of a common image parent.  Returns the extended table, if the step
    applies. */
inline std::optional<table> try_table_extension( table const& t, ntuple const& parent, int axis )
{
  std::map<ntuple, ntuple> m;
  for ( auto const& [d, i] : t.pairs() )
    m.emplace( d, i );
  std::optional<ntuple> q;
  for ( int a = 0; a < t.sig().k; ++a )
  {
    auto it = m.find( parent.child( axis, a ) );
    if ( it == m.end() )
      return std::nullopt;
    auto const& img = it->second;
    auto const& ic = img.coord( axis - 1 );
    if ( ic.empty() || ic.back() != static_cast<char>( '0' + a ) )
      return std::nullopt;
    auto cs = img.coords();
    cs[static_cast<std::size_t>( axis - 1 )].pop_back();
    ntuple cand( t.sig(), std::move( cs ) );
    if ( q && !( *q == cand ) )
      return std::nullopt;
    q = cand;
  }
  table::pair_list ps;
  for ( auto const& [d, i] : t.pairs() )
  {
    bool drop = false;
    for ( int a = 0; a < t.sig().k && !drop; ++a )
      drop = ( d == parent.child( axis, a ) );
    if ( !drop )
      ps.emplace_back( d, i );
  }
  ps.emplace_back( parent, *q );
  return table( t.sig(), std::move( ps ) );
}

inline std::vector<std::pair<ntuple, int>> extension_candidates( table const& t )
{
  std::vector<std::pair<ntuple, int>> out;
  std::set<std::pair<ntuple, int>> seen;
  for ( auto const& [d, i] : t.pairs() )
  {
    for ( int axis = 1; axis <= t.sig().n; ++axis )
    {
      auto const& dc = d.coord( axis - 1 );
      if ( dc.empty() )
        continue;
      auto cs = d.coords();
      cs[static_cast<std::size_t>( axis - 1 )].pop_back();
      ntuple parent( t.sig(), std::move( cs ) );
      if ( seen.insert( { parent, axis } ).second )
        out.emplace_back( parent, axis );
    }
  }
  return out;
}

inline std::string table_key( table const& t )
{
  std::string key;
  for ( auto const& [d, i] : t.pairs() )
  {
    key += to_string( d );
    key += '>';
    key += to_string( i );
    key += ';';
  }
  return key;
}

} // namespace detail

/*! Exhaustively applies one-step table extensions, collecting every
    distinct unextendable table reachable from t.  For n = 1 the result
    is the unique maximum extension; for n >= 2 there can be several. */
inline std::vector<table> maximal_extensions( table const& t )
{
  std::vector<table> frontier{ t };
  std::set<std::string> seen{ detail::table_key( t ) };
  std::vector<table> terminal;
  std::set<std::string> terminal_seen;
  while ( !frontier.empty() )
  {
    std::vector<table> next;
    for ( auto const& cur : frontier )
    {
      bool extended = false;
      for ( auto const& [parent, axis] : detail::extension_candidates( cur ) )
      {
        if ( auto ext = detail::try_table_extension( cur, parent, axis ) )
        {
          extended = true;
          if ( seen.insert( detail::table_key( *ext ) ).second )
            next.push_back( std::move( *ext ) );
        }
      }
      if ( !extended && terminal_seen.insert( detail::table_key( cur ) ).second )
        terminal.push_back( cur );
    }
    frontier = std::move( next );
  }
  return terminal;
}

/*! The unique maximum extension of an n = 1 table, by a single collapse
    pass over the domain prefix tree. */
inline table max_extension_v( table const& t )
{
  if ( t.sig().n != 1 )
    throw error( "WrongDimension", "maximum extensions are unique only for n = 1" );
  auto const& ps = t.pairs(); // sorted by domain
  int const k = t.sig().k;
  table::pair_list out;

  // returns the image string when [lo, hi) collapses to one pair at
  // `prefix`; otherwise emits the subtree's pairs and returns nullopt
  std::function<std::optional<std::string>( std::size_t, std::size_t, std::string const& )> rec =
      [&]( std::size_t lo, std::size_t hi, std::string const& prefix ) -> std::optional<std::string> {
    if ( hi - lo == 1 && ps[lo].first.coord( 0 ) == prefix )
      return ps[lo].second.coord( 0 );

    struct child
    {
      char digit;
      std::size_t lo, hi;
      std::optional<std::string> img;
    };
    std::vector<child> kids;
    std::size_t at = lo;
    while ( at < hi )
    {
      if ( ps[at].first.coord( 0 ).size() <= prefix.size() )
        throw error( "BadTable", "domain is not a prefix code" );
      char const digit = ps[at].first.coord( 0 )[prefix.size()];
      std::size_t end = at;
      while ( end < hi && ps[end].first.coord( 0 ).size() > prefix.size() &&
              ps[end].first.coord( 0 )[prefix.size()] == digit )
        ++end;
      kids.push_back( { digit, at, end, std::nullopt } );
      at = end;
    }
    for ( auto& c : kids )
      c.img = rec( c.lo, c.hi, prefix + c.digit );

    bool mergeable = static_cast<int>( kids.size() ) == k;
    std::optional<std::string> common;
    for ( auto const& c : kids )
    {
      if ( !mergeable )
        break;
      if ( !c.img || c.img->empty() || c.img->back() != c.digit )
      {
        mergeable = false;
        break;
      }
      std::string head = c.img->substr( 0, c.img->size() - 1 );
      if ( !common )
        common = head;
      else if ( *common != head )
        mergeable = false;
    }
    if ( mergeable )
      return common;
    for ( auto const& c : kids )
    {
      if ( c.img )
        out.emplace_back( ntuple::trusted( t.sig(), { prefix + c.digit } ),
                          ntuple::trusted( t.sig(), { *c.img } ) );
    }
    return std::nullopt;
  };

  auto whole = rec( 0, ps.size(), "" );
  if ( whole )
    return table( t.sig(), { { ntuple::root( t.sig() ), ntuple::trusted( t.sig(), { *whole } ) } } );
  return table( t.sig(), std::move( out ) );
}

} // namespace nv
