/*!
  \file code.hpp
  \brief Finite joinless codes and maximal joinless codes: validation,
  Kraft maximality test, elementwise join, one-step restriction and
  extension, and the transformation to a uniform product code.
*/

#pragma once

#include "ntuple.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace nv
{

enum class tristate : std::int8_t
{
  unknown = -1,
  no = 0,
  yes = 1
};

/*! A finite set of n-tuples, kept sorted in the fixed total order.
    Certification flags are cached lazily; values are immutable. */
class code_set
{
public:
  explicit code_set( signature sig ) : sig_( sig ) { check_signature( sig ); }

  code_set( signature sig, std::vector<ntuple> elems ) : sig_( sig ), elems_( std::move( elems ) )
  {
    check_signature( sig );
    for ( auto const& e : elems_ )
    {
      if ( !( e.sig() == sig_ ) )
        throw error( "SignatureMismatch", "element does not match code signature" );
    }
    std::sort( elems_.begin(), elems_.end() );
    elems_.erase( std::unique( elems_.begin(), elems_.end() ), elems_.end() );
  }

  code_set( code_set const& o ) : sig_( o.sig_ ), elems_( o.elems_ )
  {
    ifc_.store( o.ifc_.load() );
    joinless_.store( o.joinless_.load() );
    maximal_.store( o.maximal_.load() );
  }

  code_set& operator=( code_set const& o )
  {
    sig_ = o.sig_;
    elems_ = o.elems_;
    ifc_.store( o.ifc_.load() );
    joinless_.store( o.joinless_.load() );
    maximal_.store( o.maximal_.load() );
    return *this;
  }

  signature const& sig() const { return sig_; }
  std::vector<ntuple> const& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  bool operator==( code_set const& o ) const { return sig_ == o.sig_ && elems_ == o.elems_; }

  bool contains( ntuple const& x ) const
  {
    return std::binary_search( elems_.begin(), elems_.end(), x );
  }

  /*! Pairwise <=_init-incomparability. */
  bool is_initial_factor_code() const
  {
    if ( ifc_.load() == tristate::unknown )
      ifc_.store( compute_initial_factor_code() ? tristate::yes : tristate::no );
    return ifc_.load() == tristate::yes;
  }

  /*! No two elements have a join (quadratic pair check). */
  bool is_joinless() const
  {
    if ( joinless_.load() == tristate::unknown )
      joinless_.store( compute_joinless() ? tristate::yes : tristate::no );
    return joinless_.load() == tristate::yes;
  }

  rational kraft_sum() const
  {
    rational s = rational::zero();
    for ( auto const& e : elems_ )
      s = s + measure( e );
    return s;
  }

  /*! Kraft equality test; requires a joinless code. */
  bool is_maximal_joinless() const
  {
    if ( !is_joinless() )
      throw error( "NotJoinless", "maximality is only defined for joinless codes" );
    if ( maximal_.load() == tristate::unknown )
      maximal_.store( kraft_sum().is_one() ? tristate::yes : tristate::no );
    return maximal_.load() == tristate::yes;
  }

  struct certifications
  {
    tristate initial_factor_code;
    tristate joinless;
    tristate maximal_joinless;
  };

  certifications certified() const
  {
    return { ifc_.load(), joinless_.load(), maximal_.load() };
  }

  /*! The unique element that is an initial factor of x, if any. */
  std::optional<ntuple> initial_factor_in( ntuple const& x ) const
  {
    if ( sig_.n == 1 )
    {
      // binary search: the prefix of x, when present, is the
      // lexicographic predecessor-or-equal of x in a prefix code
      auto it = std::upper_bound( elems_.begin(), elems_.end(), x );
      if ( it == elems_.begin() )
        return std::nullopt;
      --it;
      if ( is_prefix( it->coord( 0 ), x.coord( 0 ) ) )
        return *it;
      return std::nullopt;
    }
    for ( auto const& e : elems_ )
    {
      if ( leq_init( e, x ) )
        return e;
    }
    return std::nullopt;
  }

  code_set with_flags( tristate joinless, tristate maximal ) const
  {
    code_set r = *this;
    r.joinless_.store( joinless );
    r.maximal_.store( maximal );
    return r;
  }

private:
  bool compute_initial_factor_code() const
  {
    for ( std::size_t i = 0; i < elems_.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < elems_.size(); ++j )
      {
        if ( leq_init( elems_[i], elems_[j] ) || leq_init( elems_[j], elems_[i] ) )
          return false;
      }
    }
    return true;
  }

  bool compute_joinless() const
  {
    if ( sig_.n == 1 )
    {
      // prefix code check; in sorted order a prefix pair is adjacent
      for ( std::size_t i = 0; i + 1 < elems_.size(); ++i )
      {
        if ( is_prefix( elems_[i].coord( 0 ), elems_[i + 1].coord( 0 ) ) )
          return false;
      }
      return true;
    }
    for ( std::size_t i = 0; i < elems_.size(); ++i )
    {
      for ( std::size_t j = i + 1; j < elems_.size(); ++j )
      {
        if ( joinable( elems_[i], elems_[j] ) )
          return false;
      }
    }
    return true;
  }

  signature sig_;
  std::vector<ntuple> elems_;
  mutable std::atomic<tristate> ifc_{ tristate::unknown };
  mutable std::atomic<tristate> joinless_{ tristate::unknown };
  mutable std::atomic<tristate> maximal_{ tristate::unknown };
};

/*! ell of a code: max ell over elements. */
inline int ell( code_set const& P )
{
  int m = 0;
  for ( auto const& e : P )
    m = std::max( m, ell( e ) );
  return m;
}

/*! {p v q : p in P, q in Q, join exists}. Joinless when P and Q are;
    maximal iff both are. */
inline code_set elementwise_join( code_set const& P, code_set const& Q )
{
  if ( !( P.sig() == Q.sig() ) )
    throw error( "SignatureMismatch", "codes live in different monoids" );
  if ( !P.is_joinless() || !Q.is_joinless() )
    throw error( "NotJoinless", "elementwise join requires joinless codes" );

  std::vector<ntuple> out;
  if ( P.sig().n == 1 )
  {
    // joins are exactly the elements of one code that extend an element
    // of the other; prefix lookups make this near-linear
    std::unordered_set<std::string> ps, qs;
    for ( auto const& p : P )
      ps.insert( p.coord( 0 ) );
    for ( auto const& q : Q )
      qs.insert( q.coord( 0 ) );
    auto has_prefix_in = []( std::unordered_set<std::string> const& s, std::string const& x ) {
      std::string pre;
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
    for ( auto const& p : P )
      if ( has_prefix_in( qs, p.coord( 0 ) ) )
        out.push_back( p );
    for ( auto const& q : Q )
      if ( has_prefix_in( ps, q.coord( 0 ) ) )
        out.push_back( q );
  }
  else
  {
    for ( auto const& p : P )
    {
      for ( auto const& q : Q )
      {
        if ( auto j = join( p, q ) )
          out.push_back( *j );
      }
    }
  }

  tristate maximal = tristate::unknown;
  auto cp = P.certified();
  auto cq = Q.certified();
  if ( cp.maximal_joinless == tristate::yes && cq.maximal_joinless == tristate::yes )
    maximal = tristate::yes;
  else if ( cp.maximal_joinless == tristate::no || cq.maximal_joinless == tristate::no )
    maximal = tristate::no;
  return code_set( P.sig(), std::move( out ) ).with_flags( tristate::yes, maximal );
}

/*! Replaces p by its k one-digit extensions in coordinate axis (1-based).
    Preserves joinlessness and maximality in both directions. */
inline code_set one_step_restriction( code_set const& P, ntuple const& p, int axis )
{
  if ( axis < 1 || axis > P.sig().n )
    throw error( "BadAxis", "axis " + std::to_string( axis ) + " out of range" );
  if ( !P.contains( p ) )
    throw error( "ElementNotInCode", to_string( p ) + " is not in the code" );
  std::vector<ntuple> out;
  out.reserve( P.size() + static_cast<std::size_t>( P.sig().k ) - 1 );
  for ( auto const& e : P )
  {
    if ( !( e == p ) )
      out.push_back( e );
  }
  for ( int a = 0; a < P.sig().k; ++a )
    out.push_back( p.child( axis, a ) );
  auto c = P.certified();
  return code_set( P.sig(), std::move( out ) ).with_flags( c.joinless, c.maximal_joinless );
}

/*! Replaces the k one-digit axis-extensions of v by v; inverse of
    one_step_restriction. */
inline code_set one_step_extension( code_set const& P, ntuple const& v, int axis )
{
  if ( axis < 1 || axis > P.sig().n )
    throw error( "BadAxis", "axis " + std::to_string( axis ) + " out of range" );
  for ( int a = 0; a < P.sig().k; ++a )
  {
    if ( !P.contains( v.child( axis, a ) ) )
      throw error( "ChildrenMissing", "not all axis-" + std::to_string( axis ) + " children of " + to_string( v ) + " are present" );
  }
  std::vector<ntuple> out;
  out.reserve( P.size() );
  for ( auto const& e : P )
  {
    bool is_child = false;
    for ( int a = 0; a < P.sig().k && !is_child; ++a )
      is_child = ( e == v.child( axis, a ) );
    if ( !is_child )
      out.push_back( e );
  }
  out.push_back( v );
  auto c = P.certified();
  return code_set( P.sig(), std::move( out ) ).with_flags( c.joinless, c.maximal_joinless );
}

/*! The product code A^{k_1} x ... x A^{k_n}; maximal, has a parse tree. */
inline code_set uniform_code( signature sig, std::vector<int> const& ks )
{
  check_signature( sig );
  if ( static_cast<int>( ks.size() ) != sig.n )
    throw error( "BadAxis", "need one depth per coordinate" );
  for ( int d : ks )
  {
    if ( d < 0 )
      throw error( "BadAxis", "negative depth" );
  }
  std::vector<ntuple> out;
  std::vector<std::string> cur( static_cast<std::size_t>( sig.n ) );
  std::function<void( int )> rec = [&]( int i ) {
    if ( i == sig.n )
    {
      out.emplace_back( sig, cur );
      return;
    }
    std::function<void( int )> digits = [&]( int pos ) {
      if ( pos == ks[static_cast<std::size_t>( i )] )
      {
        rec( i + 1 );
        return;
      }
      for ( int a = 0; a < sig.k; ++a )
      {
        cur[static_cast<std::size_t>( i )].push_back( static_cast<char>( '0' + a ) );
        digits( pos + 1 );
        cur[static_cast<std::size_t>( i )].pop_back();
      }
    };
    digits( 0 );
  };
  rec( 0 );
  return code_set( sig, std::move( out ) ).with_flags( tristate::yes, tristate::yes );
}

/*! Uniform code of depth d in every coordinate, i.e. nA^d. */
inline code_set uniform_code( signature sig, int depth )
{
  return uniform_code( sig, std::vector<int>( static_cast<std::size_t>( sig.n ), depth ) );
}

struct restriction_step
{
  ntuple at;
  int axis;
};

inline code_set apply_steps( code_set P, std::vector<restriction_step> const& steps )
{
  for ( auto const& s : steps )
    P = one_step_restriction( P, s.at, s.axis );
  return P;
}

/*! A sequence of one-step restrictions transforming a maximal joinless
    code into the uniform code of its per-coordinate maximum depths. */
inline std::vector<restriction_step> restrict_to_uniform( code_set const& P )
{
  if ( !P.is_maximal_joinless() )
    throw error( "NotMaximal", "only maximal joinless codes restrict to a uniform code" );
  std::vector<int> ks( static_cast<std::size_t>( P.sig().n ), 0 );
  for ( auto const& e : P )
  {
    for ( int i = 0; i < P.sig().n; ++i )
      ks[static_cast<std::size_t>( i )] = std::max( ks[static_cast<std::size_t>( i )], static_cast<int>( e.coord( i ).size() ) );
  }
  std::vector<restriction_step> steps;
  code_set cur = P;
  for ( ;; )
  {
    bool found = false;
    for ( auto const& e : cur )
    {
      for ( int i = 1; i <= cur.sig().n && !found; ++i )
      {
        if ( static_cast<int>( e.coord( i - 1 ).size() ) < ks[static_cast<std::size_t>( i - 1 )] )
        {
          steps.push_back( { e, i } );
          cur = one_step_restriction( cur, e, i );
          found = true;
        }
      }
      if ( found )
        break;
    }
    if ( !found )
      break;
  }
  return steps;
}

} // namespace nv
