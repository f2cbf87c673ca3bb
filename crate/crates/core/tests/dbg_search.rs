use theta_core::BinMatrix;

fn safe(adj: &[u32], n: usize, u: usize, v: usize) -> bool {
    if (adj[u] & adj[v]).count_ones() >= 2 { return false; }
    for x in 0..n {
        if x != u && adj[v] >> x & 1 == 1 && (adj[u] & adj[x]) != 0 { return false; }
        if x != v && adj[u] >> x & 1 == 1 && (adj[v] & adj[x]) != 0 { return false; }
    }
    true
}

fn dfs(adj: &mut Vec<u32>, n: usize, found: &mut Option<Vec<u32>>, nodes: &mut u64) {
    if found.is_some() { return; }
    *nodes += 1;
    if *nodes > 200_000_000 { return; }
    let Some(u) = (0..n).find(|&v| adj[v].count_ones() < 4) else {
        *found = Some(adj.clone());
        return;
    };
    for v in u + 1..n {
        if found.is_some() { return; }
        if adj[v].count_ones() >= 4 || adj[u] >> v & 1 == 1 { continue; }
        if !safe(adj, n, u, v) { continue; }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        dfs(adj, n, found, nodes);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}

// chain of 8 triangles sharing 7 vertices: T_i = {s_{i-1}, f_i.., s_i}
#[test]
fn dbg_skeleton_t8_chain() {
    let n = 17;
    // shared vertices s1..s7 = 0..6; free vertices 7..16
    // T1 = {7, 8, 0}; T2 = {0, 9, 1}; T3 = {1, 10, 2}; T4 = {2, 11, 3};
    // T5 = {3, 12, 4}; T6 = {4, 13, 5}; T7 = {5, 14, 6}; T8 = {6, 15, 16}
    let tris: Vec<[usize; 3]> = vec![
        [7, 8, 0], [0, 9, 1], [1, 10, 2], [2, 11, 3],
        [3, 12, 4], [4, 13, 5], [5, 14, 6], [6, 15, 16],
    ];
    let mut adj = vec![0u32; n];
    for t in &tris {
        for i in 0..3 {
            for j in i + 1..3 {
                adj[t[i]] |= 1 << t[j];
                adj[t[j]] |= 1 << t[i];
            }
        }
    }
    let mut found = None;
    let mut nodes = 0u64;
    dfs(&mut adj, n, &mut found, &mut nodes);
    println!("t8 chain nodes explored: {nodes}");
    if let Some(adj) = found {
        let m = BinMatrix::from_row_masks(n, adj.iter().map(|&x| x as u64).collect()).unwrap();
        assert_eq!(m.constant_sum(), Some(4));
        assert!(theta_core::is_j2_free(&m));
        let g = theta_core::geometry::Graph::new(m.clone()).unwrap();
        let census = theta_core::geometry::triangle_census(&g);
        println!("triangle-free vertices: {}", census.per_vertex.iter().filter(|&&c| c == 0).count());
        if census.per_vertex.iter().all(|&c| c > 0) {
            println!("FOUND masks: {:?}", adj);
            for i in 0..n {
                let cols: Vec<usize> = (0..n).filter(|&j| m.get(i, j)).collect();
                println!("// row {i:2}: {cols:?}");
            }
        }
    } else {
        println!("t8 chain: no completion");
    }
}
