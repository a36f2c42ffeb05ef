package org.example.cache;

public class StaleCounter {
    public int countExpired(long now) {
        int total = 0;
        for (Map.Entry<String, Long> e : this.stamps.entrySet()) {
            if (now - e.getValue() > this.timeout) total++;
        }
        return total;
    }

    public int countStale(long now) {
        int total = 0;
        for (Map.Entry<String, Long> e : this.lastAccess.entrySet()) {
            if (now - e.getValue() > this.timeout) total++;
        }
        return total;
    }

    public int countOld(long now) {
        int total = 0;
        for (Map.Entry<String, Long> e : this.created.entrySet()) {
            if (now - e.getValue() > this.timeout) total++;
        }
        return total;
    }

    public int countIdle(long now) {
        int total = 0;
        for (Map.Entry<String, Long> e : this.sessions.entrySet()) {
            if (now - e.getValue() > this.timeout) total++;
        }
        return total;
    }

    public int countDead(long now) {
        int total = 0;
        for (Map.Entry<String, Long> e : this.tokens.entrySet()) {
            if (now - e.getValue() > this.timeout) total++;
        }
        return total;
    }
}
