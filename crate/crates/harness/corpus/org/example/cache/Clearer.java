package org.example.cache;

public class Clearer {
    public void clearStamps() {
        Iterator<Map.Entry<String, Long>> it = this.stamps.entrySet().iterator();
        while (it.hasNext()) {
            it.next().setValue(0L);
        }
        this.size = 0;
    }

    public void clearAccess() {
        Iterator<Map.Entry<String, Long>> it = this.lastAccess.entrySet().iterator();
        while (it.hasNext()) {
            it.next().setValue(0L);
        }
        this.size = 0;
    }

    public void clearCreated() {
        Iterator<Map.Entry<String, Long>> it = this.created.entrySet().iterator();
        while (it.hasNext()) {
            it.next().setValue(0L);
        }
        this.size = 0;
    }

    public void clearSessions() {
        Iterator<Map.Entry<String, Long>> it = this.sessions.entrySet().iterator();
        while (it.hasNext()) {
            it.next().setValue(0L);
        }
        this.size = 0;
    }

    public void clearTokens() {
        Iterator<Map.Entry<String, Long>> it = this.tokens.entrySet().iterator();
        while (it.hasNext()) {
            it.next().setValue(0L);
        }
        this.size = 0;
    }
}
