public class Demo20 {
    public void reverse(int[] counts) {
        int left = 0;
        int right = counts.length - 1;
        while (left < right) {
            int t = counts[left];
            counts[left] = counts[right];
            counts[right] = t;
            left++;
            right--;
        }
    }
}
